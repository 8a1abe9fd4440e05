#include "cycsig/cli.hpp"

#include "cycsig/error.hpp"
#include "cycsig/gf2mat.hpp"
#include "cycsig/paritylab.hpp"
#include "cycsig/period_field.hpp"
#include "cycsig/unitexpr.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <optional>
#include <ostream>

namespace cycsig::cli {

using json = nlohmann::ordered_json;

namespace {

struct FieldOptions {
    std::int64_t p = 0;
    int n = 1;
    std::string format = "text";
};

void add_field_options(CLI::App& sub, FieldOptions& opts, bool with_format = true) {
    sub.add_option("-p", opts.p, "prime p")->required();
    sub.add_option("-n", opts.n, "exponent n (default 1)");
    if (with_format) {
        sub.add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "text"}));
    }
}

json modulus_json(const Modulus& m) {
    return {{"p", m.p()}, {"n", m.n()}, {"N", m.N()}, {"half_degree", m.half_degree()}};
}

std::string approx(const mpq_class& x) { return std::to_string(x.get_d()); }

struct Augmentation {
    std::int64_t circular_rank;
    std::int64_t augmented_rank;
    std::vector<UnitExpr> units;
    std::vector<SignVector> signatures;
};

Augmentation augment_matrix(const Modulus& mod, std::int64_t degree, const std::vector<std::string>& exprs) {
    const BitMatrix circ = signature_matrix(mod);
    const PeriodField pf = make_period_field(coset_decomposition(group_generator(mod), degree));
    Augmentation out{static_cast<std::int64_t>(rank(circ)), 0, {}, {}};
    std::vector<LabeledRow> extra;
    for (const auto& text : exprs) {
        UnitExpr e = parse_unit_expr(text);
        SignVector sig = expr_signature(e, pf, mod);
        extra.push_back({sig, e.source});
        out.units.push_back(std::move(e));
        out.signatures.push_back(std::move(sig));
    }
    out.augmented_rank = static_cast<std::int64_t>(rank(append_rows(circ, extra)));
    return out;
}

int cmd_sigrank(const FieldOptions& o, const std::string& matrix_out, std::ostream& out) {
    const Modulus mod(o.p, o.n);
    const BitMatrix m = signature_matrix(mod);
    const auto r = static_cast<std::int64_t>(rank(m));
    const IndexExponents idx = indices_from_rank(mod, r);
    if (!matrix_out.empty()) {
        std::ofstream f(matrix_out);
        if (!f) throw Error(Errc::ParseError, "cannot write " + matrix_out);
        m.write_text(f);
    }
    if (o.format == "json") {
        json j;
        j["modulus"] = modulus_json(mod);
        j["rank"] = r;
        j["C_to_Cplus_exp"] = idx.C_to_Cplus;
        j["Cplus_to_Csq_exp"] = idx.Cplus_to_Csq;
        out << j.dump(2) << '\n';
    } else {
        out << "N = " << mod.N() << ", half degree " << mod.half_degree() << '\n'
            << "signature rank: " << r << '\n'
            << "[C:C+] = 2^" << idx.C_to_Cplus << '\n'
            << "[C+:C^2] = 2^" << idx.Cplus_to_Csq << '\n';
    }
    return kExitOk;
}

int cmd_periods(const FieldOptions& o, std::int64_t degree, std::ostream& out) {
    const Modulus mod(o.p, o.n);
    const CosetDecomposition cd = coset_decomposition(group_generator(mod), degree);
    const PeriodField pf = make_period_field(cd);
    if (o.format == "json") {
        json j;
        j["modulus"] = modulus_json(mod);
        j["degree"] = degree;
        j["min_poly"] = {{"coefficients", pf.min_poly.to_coeff_list()}, {"text", pf.min_poly.to_string()}};
        json roots = json::array();
        for (const auto& iv : pf.roots) {
            roots.push_back({{"lo", iv.lo.get_str()}, {"hi", iv.hi.get_str()}});
        }
        j["roots"] = roots;
        j["coset_to_root"] = pf.root_of_coset;
        out << j.dump(2) << '\n';
    } else {
        out << "minimal polynomial: " << pf.min_poly.to_string() << '\n'
            << "coefficients: " << pf.min_poly.to_coeff_list() << '\n';
        for (std::size_t i = 0; i < pf.roots.size(); ++i) {
            out << "root " << i << ": [" << pf.roots[i].lo.get_str() << ", " << pf.roots[i].hi.get_str() << "]  ~["
                << approx(pf.roots[i].lo) << ", " << approx(pf.roots[i].hi) << "]\n";
        }
        for (std::size_t j = 0; j < pf.root_of_coset.size(); ++j) {
            out << "coset " << j << " -> root " << pf.root_of_coset[j] << '\n';
        }
    }
    return kExitOk;
}

int cmd_augment(const FieldOptions& o, std::int64_t degree, const std::vector<std::string>& exprs,
                std::ostream& out) {
    const Modulus mod(o.p, o.n);
    const Augmentation a = augment_matrix(mod, degree, exprs);
    if (o.format == "json") {
        json j;
        j["modulus"] = modulus_json(mod);
        j["degree"] = degree;
        j["circular_rank"] = a.circular_rank;
        j["augmented_rank"] = a.augmented_rank;
        json units = json::array();
        for (std::size_t i = 0; i < a.units.size(); ++i) {
            units.push_back({{"expr", a.units[i].source},
                             {"poly", a.units[i].poly.to_coeff_list()},
                             {"signature", a.signatures[i].to_string()}});
        }
        j["units"] = units;
        out << j.dump(2) << '\n';
    } else {
        out << "circular rank: " << a.circular_rank << '\n' << "augmented rank: " << a.augmented_rank << '\n';
        for (std::size_t i = 0; i < a.units.size(); ++i) {
            out << a.units[i].source << ": " << a.signatures[i].to_string() << '\n';
        }
    }
    return kExitOk;
}

int cmd_prop1(const FieldOptions& o, std::optional<std::int64_t> degree, const std::vector<std::string>& exprs,
              const std::string& class_data, bool bundled, std::ostream& out) {
    const Modulus mod(o.p, o.n);
    std::optional<std::int64_t> augmented;
    std::int64_t circular = 0;
    if (!exprs.empty()) {
        if (!degree) throw Error(Errc::BadDegree, "-u requires -d");
        const Augmentation a = augment_matrix(mod, *degree, exprs);
        circular = a.circular_rank;
        augmented = a.augmented_rank;
    } else {
        circular = static_cast<std::int64_t>(rank(signature_matrix(mod)));
    }
    std::optional<ClassParityRecord> data;
    if (!class_data.empty()) data = find_record(load_class_data(class_data), mod);
    if (bundled && !data) data = find_record(bundled_class_data(), mod);
    const Prop1Report report = evaluate_prop1(mod, circular, augmented, data);
    out << emit_report(report, o.format == "json" ? ReportFormat::Json : ReportFormat::Text);
    return kExitOk;
}

int cmd_oracle_check(const FieldOptions& o, std::ostream& out) {
    const Modulus mod(o.p, o.n);
    const OracleCheckResult r = oracle_check(mod);
    if (o.format == "json") {
        json j;
        j["modulus"] = modulus_json(mod);
        j["entries"] = r.entries;
        j["mismatches"] = r.mismatches;
        out << j.dump(2) << '\n';
    } else {
        out << "checked " << r.entries << " entries, " << r.mismatches << " mismatches\n";
    }
    return r.mismatches == 0 ? kExitOk : kExitFailure;
}

} // namespace

OracleCheckResult oracle_check(const Modulus& mod) {
    const BitMatrix m = signature_matrix(mod);
    const auto embeddings = embedding_set(mod);
    const std::int64_t N = mod.N();
    // zeta^k under sigma_b, with the exponent reduced mod N first.
    auto zeta = [N](std::int64_t k, std::int64_t b) {
        const std::int64_t e = ((k % N + N) % N) * b % N;
        return std::polar(1.0L, 2.0L * static_cast<long double>(M_PI) * static_cast<long double>(e) /
                                    static_cast<long double>(N));
    };
    OracleCheckResult r;
    for (std::size_t row = 0; row < m.rows(); ++row) {
        // Row 0 is -1; row k >= 1 is xi_a for the k-th element of B \ {1}.
        const std::int64_t a = row == 0 ? -1 : embeddings[row];
        // zeta^((1-a)/2) is (zeta_2N)^(1-a) with zeta_2N = -zeta^((N+1)/2) when
        // N is odd; for odd a the exponent is an integer already.
        const bool even_a = a > 0 && a % 2 == 0;
        const std::int64_t half_exp = even_a ? (1 - a) * ((N + 1) / 2) % N : (1 - a) / 2;
        const long double twist = even_a ? -1.0L : 1.0L;
        for (std::size_t col = 0; col < embeddings.size(); ++col) {
            const std::int64_t b = embeddings[col];
            long double value = -1.0L;
            if (a > 0) value = twist * (zeta(half_exp, b) * (1.0L - zeta(a, b)) / (1.0L - zeta(1, b))).real();
            ++r.entries;
            if ((value < 0) != m.row(row).get(col)) ++r.mismatches;
        }
    }
    return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Signatures of circular units in real prime-power cyclotomic fields"};
    app.require_subcommand(1);

    FieldOptions fo;
    std::string matrix_out;
    std::int64_t degree = 0;
    std::vector<std::string> exprs;
    std::string class_data;
    bool bundled = false;

    auto* sigrank = app.add_subcommand("sigrank", "signature rank of the circular units");
    add_field_options(*sigrank, fo);
    sigrank->add_option("--matrix-out", matrix_out, "write the signature matrix to FILE");

    auto* periods = app.add_subcommand("periods", "minimal polynomial and real roots of a period subfield");
    add_field_options(*periods, fo);
    periods->add_option("-d", degree, "subfield degree")->required();

    auto* augment = app.add_subcommand("augment", "rank after adding signatures of subfield units");
    add_field_options(*augment, fo);
    augment->add_option("-d", degree, "subfield degree")->required();
    augment->add_option("-u", exprs, "unit expression in a (repeatable)")->required();

    auto* prop1 = app.add_subcommand("prop1", "status of the class-number parity statements");
    add_field_options(*prop1, fo);
    auto* prop1_degree = prop1->add_option("-d", degree, "subfield degree");
    prop1->add_option("-u", exprs, "unit expression in a (repeatable)");
    prop1->add_option("--class-data", class_data, "CSV of class-number parities");
    prop1->add_flag("--bundled-data", bundled, "use the bundled parity records");

    auto* oracle = app.add_subcommand("oracle-check", "compare exact signs with floating-point evaluation");
    add_field_options(*oracle, fo);

    std::vector<std::string> argv_storage{"cycsig"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*sigrank) return cmd_sigrank(fo, matrix_out, out);
        if (*periods) return cmd_periods(fo, degree, out);
        if (*augment) return cmd_augment(fo, degree, exprs, out);
        if (*prop1) {
            std::optional<std::int64_t> d;
            if (*prop1_degree) d = degree;
            return cmd_prop1(fo, d, exprs, class_data, bundled, out);
        }
        if (*oracle) return cmd_oracle_check(fo, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::Contradiction ? kExitContradiction : kExitInputError;
    }
    return kExitInputError;
}

} // namespace cycsig::cli
