#include "cycsig/paritylab.hpp"

#include "cycsig/circsig.hpp"
#include "cycsig/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cycsig {

namespace {

constexpr std::string_view kCsvHeader = "p,n,h_K,h_minus,h_Kplus,h_strict_Kplus,source";

constexpr std::string_view kBundledCsv =
    "p,n,h_K,h_minus,h_Kplus,h_strict_Kplus,source\n"
    "29,1,even,even,odd,unknown,h(K) = 8 and h(K+) = 1 (Washington tables); h^- = 8 / 1\n"
    "163,1,even,even,even,even,h^- = 2^2*181*23167*365473*441845817162679; 4 | h(K+) = strict h(K+); 16 | h(K)\n"
    "2,2,odd,odd,odd,odd,Weber: all parity statements hold for p = 2\n"
    "2,3,odd,odd,odd,odd,Weber: all parity statements hold for p = 2\n"
    "2,4,odd,odd,odd,odd,Weber: all parity statements hold for p = 2\n"
    "2,5,odd,odd,odd,odd,Weber: all parity statements hold for p = 2\n"
    "2,6,odd,odd,odd,odd,Weber: all parity statements hold for p = 2\n"
    "2,7,odd,odd,odd,odd,Weber: all parity statements hold for p = 2\n";

Parity parse_parity(const std::string& s, std::size_t line) {
    if (s == "odd") return Parity::Odd;
    if (s == "even") return Parity::Even;
    if (s == "unknown" || s.empty()) return Parity::Unknown;
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": bad parity '" + s + "'", line);
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": bad integer '" + s + "'", line);
}

} // namespace

std::string_view to_string(Parity p) noexcept {
    switch (p) {
    case Parity::Odd: return "odd";
    case Parity::Even: return "even";
    case Parity::Unknown: return "unknown";
    }
    return "unknown";
}

std::string_view to_string(Status s) noexcept {
    switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Unknown: return "unknown";
    }
    return "unknown";
}

std::string_view to_string(Provenance p) noexcept {
    switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::FromData: return "from-data";
    case Provenance::Inferred: return "inferred";
    case Provenance::None: return "none";
    }
    return "none";
}

void validate(const ClassParityRecord& r) {
    const auto where = "p=" + std::to_string(r.p) + ", n=" + std::to_string(r.n) + ": ";
    // h(K) = h^- * h(K+): odd iff both factors are odd.
    if (r.h_K == Parity::Odd && (r.h_minus == Parity::Even || r.h_Kplus == Parity::Even)) {
        throw Error(Errc::InconsistentParities, where + "h(K) odd but a factor is even");
    }
    if (r.h_K == Parity::Even && r.h_minus == Parity::Odd && r.h_Kplus == Parity::Odd) {
        throw Error(Errc::InconsistentParities, where + "h(K) even but h^- and h(K+) are odd");
    }
    // h(K+) divides the strict class number.
    if (r.h_Kplus == Parity::Even && r.h_strict_Kplus == Parity::Odd) {
        throw Error(Errc::InconsistentParities, where + "h(K+) even but strict h(K+) odd");
    }
}

std::vector<ClassParityRecord> parse_class_data(std::istream& is) {
    std::vector<ClassParityRecord> out;
    std::string line;
    std::size_t lineno = 0;
    bool seen_header = false;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        if (!seen_header) {
            if (trimmed != kCsvHeader) {
                throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected header '" +
                                                  std::string(kCsvHeader) + "'", lineno);
            }
            seen_header = true;
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (int i = 0; i < 6; ++i) {
            const std::size_t comma = trimmed.find(',', start);
            if (comma == std::string::npos) {
                throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 7 fields", lineno);
            }
            fields.push_back(trim(trimmed.substr(start, comma - start)));
            start = comma + 1;
        }
        std::string source = trim(trimmed.substr(start));
        if (source.size() >= 2 && source.front() == '"' && source.back() == '"') {
            source = source.substr(1, source.size() - 2);
        }
        ClassParityRecord r;
        r.p = parse_int(fields[0], lineno);
        r.n = static_cast<int>(parse_int(fields[1], lineno));
        r.h_K = parse_parity(fields[2], lineno);
        r.h_minus = parse_parity(fields[3], lineno);
        r.h_Kplus = parse_parity(fields[4], lineno);
        r.h_strict_Kplus = parse_parity(fields[5], lineno);
        r.source = std::move(source);
        validate(r);
        out.push_back(std::move(r));
    }
    if (!seen_header) throw Error(Errc::ParseError, "missing header");
    return out;
}

std::vector<ClassParityRecord> load_class_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    return parse_class_data(in);
}

std::string_view bundled_class_data_csv() noexcept { return kBundledCsv; }

std::vector<ClassParityRecord> bundled_class_data() {
    std::istringstream in{std::string(kBundledCsv)};
    return parse_class_data(in);
}

std::optional<ClassParityRecord> find_record(const std::vector<ClassParityRecord>& records, const Modulus& m) {
    for (const auto& r : records) {
        if (r.p == m.p() && r.n == m.n()) return r;
    }
    return std::nullopt;
}

const StatementStatus& Prop1Report::statement(std::string_view id) const {
    for (const auto& s : statements) {
        if (s.id == id) return s;
    }
    throw std::out_of_range("no statement " + std::string(id));
}

StatementStatus& Prop1Report::statement(std::string_view id) {
    return const_cast<StatementStatus&>(std::as_const(*this).statement(id));
}

namespace {

constexpr std::array<std::string_view, 5> kMain = {"1", "2", "3", "4", "6"};
constexpr std::array<std::string_view, 3> kGroupA = {"a1", "a2", "a3"};
constexpr std::array<std::string_view, 3> kGroupB = {"b1", "b2", "b3"};

Status from_parity(Parity p) {
    switch (p) {
    case Parity::Odd: return Status::Holds;
    case Parity::Even: return Status::Fails;
    case Parity::Unknown: return Status::Unknown;
    }
    return Status::Unknown;
}

// Records a status for one statement; a clash with an existing known
// status means the inputs contradict the equivalences.
bool assign(Prop1Report& r, std::string_view id, Status s, Provenance why) {
    if (s == Status::Unknown) return false;
    StatementStatus& st = r.statement(id);
    if (st.status == s) return false;
    if (st.status != Status::Unknown) {
        throw Error(Errc::Contradiction, "statement (" + std::string(id) + ") is both " +
                                             std::string(to_string(st.status)) + " and " + std::string(to_string(s)));
    }
    st.status = s;
    st.provenance = why;
    return true;
}

template <std::size_t K>
Status group_status(Prop1Report& r, const std::array<std::string_view, K>& ids) {
    Status seen = Status::Unknown;
    std::string_view first;
    for (auto id : ids) {
        const Status s = r.statement(id).status;
        if (s == Status::Unknown) continue;
        if (seen != Status::Unknown && s != seen) {
            throw Error(Errc::Contradiction, "equivalent statements (" + std::string(first) + ") and (" +
                                                 std::string(id) + ") disagree");
        }
        seen = s;
        first = id;
    }
    return seen;
}

template <std::size_t K>
bool assign_group(Prop1Report& r, const std::array<std::string_view, K>& ids, Status s) {
    bool changed = false;
    for (auto id : ids) changed = assign(r, id, s, Provenance::Inferred) || changed;
    return changed;
}

} // namespace

void close_statuses(Prop1Report& r) {
    bool changed = true;
    while (changed) {
        changed = false;
        const Status m = group_status(r, kMain);
        const Status a = group_status(r, kGroupA);
        const Status b = group_status(r, kGroupB);
        changed = assign_group(r, kMain, m) || changed;
        changed = assign_group(r, kGroupA, a) || changed;
        changed = assign_group(r, kGroupB, b) || changed;
        // main <=> (a and b)
        if (m == Status::Holds) {
            changed = assign_group(r, kGroupA, Status::Holds) || changed;
            changed = assign_group(r, kGroupB, Status::Holds) || changed;
        }
        if (a == Status::Holds && b == Status::Holds) changed = assign_group(r, kMain, Status::Holds) || changed;
        if (a == Status::Fails || b == Status::Fails) changed = assign_group(r, kMain, Status::Fails) || changed;
        if (m == Status::Fails && a == Status::Holds) changed = assign_group(r, kGroupB, Status::Fails) || changed;
        if (m == Status::Fails && b == Status::Holds) changed = assign_group(r, kGroupA, Status::Fails) || changed;
    }
}

Prop1Report evaluate_prop1(const Modulus& mod, std::int64_t circular_rank,
                           std::optional<std::int64_t> augmented_rank,
                           const std::optional<ClassParityRecord>& data) {
    indices_from_rank(mod, circular_rank);
    if (augmented_rank && (*augmented_rank < circular_rank || *augmented_rank > mod.half_degree())) {
        throw Error(Errc::RankOutOfRange, "augmented rank " + std::to_string(*augmented_rank) + " outside [" +
                                              std::to_string(circular_rank) + ", " +
                                              std::to_string(mod.half_degree()) + "]");
    }

    Prop1Report r{mod, circular_rank, augmented_rank, {}};
    for (std::size_t i = 0; i < kStatementIds.size(); ++i) r.statements[i].id = kStatementIds[i];

    assign(r, "6", circular_rank == mod.half_degree() ? Status::Holds : Status::Fails, Provenance::Computed);
    // A deficient augmented rank tested only a subgroup of E, so it proves nothing.
    if (augmented_rank && *augmented_rank == mod.half_degree()) {
        assign(r, "b3", Status::Holds, Provenance::Computed);
    }

    if (data) {
        if (data->p != mod.p() || data->n != mod.n()) {
            throw Error(Errc::InconsistentParities, "class data is for p=" + std::to_string(data->p) +
                                                        ", n=" + std::to_string(data->n));
        }
        validate(*data);
        assign(r, "1", from_parity(data->h_K), Provenance::FromData);
        assign(r, "2", from_parity(data->h_minus), Provenance::FromData);
        assign(r, "4", from_parity(data->h_strict_Kplus), Provenance::FromData);
        assign(r, "a1", from_parity(data->h_Kplus), Provenance::FromData);
        // strict h(K+) = h(K+) * [E^+ : E^2]; parities decide (b1) only when h(K+) is odd.
        if (data->h_Kplus == Parity::Odd) {
            assign(r, "b1", from_parity(data->h_strict_Kplus), Provenance::FromData);
        }
    }

    close_statuses(r);
    return r;
}

std::string emit_report(const Prop1Report& r, ReportFormat format) {
    const Modulus& m = r.modulus;
    const IndexExponents idx = indices_from_rank(m, r.circular_rank);
    if (format == ReportFormat::Json) {
        nlohmann::ordered_json j;
        j["modulus"] = {{"p", m.p()}, {"n", m.n()}, {"N", m.N()}, {"half_degree", m.half_degree()}};
        nlohmann::ordered_json ranks;
        ranks["circular"] = r.circular_rank;
        ranks["augmented"] = r.augmented_rank ? nlohmann::ordered_json(*r.augmented_rank) : nlohmann::ordered_json();
        ranks["C_to_Cplus_exp"] = idx.C_to_Cplus;
        ranks["Cplus_to_Csq_exp"] = idx.Cplus_to_Csq;
        j["ranks"] = ranks;
        nlohmann::ordered_json statements = nlohmann::ordered_json::object();
        for (const auto& s : r.statements) {
            statements[std::string(s.id)] = {{"id", s.id},
                                             {"status", to_string(s.status)},
                                             {"provenance", to_string(s.provenance)}};
        }
        j["statements"] = statements;
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "field: Q(zeta_" << m.N() << ")^+  (p=" << m.p() << ", n=" << m.n() << ", half degree "
       << m.half_degree() << ")\n";
    os << "circular signature rank: " << r.circular_rank << '\n';
    os << "[C:C+] = 2^" << idx.C_to_Cplus << '\n';
    os << "[C+:C^2] = 2^" << idx.Cplus_to_Csq << '\n';
    if (r.augmented_rank) os << "augmented signature rank: " << *r.augmented_rank << '\n';
    os << "statements:\n";
    for (const auto& s : r.statements) {
        std::string id = "(" + std::string(s.id) + ")";
        id.resize(std::max<std::size_t>(id.size(), 6), ' ');
        std::string status(to_string(s.status));
        status.resize(9, ' ');
        os << "  " << id << ' ' << status << to_string(s.provenance) << '\n';
    }
    return os.str();
}

} // namespace cycsig
