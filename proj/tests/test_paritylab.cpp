#include "cycsig/circsig.hpp"
#include "cycsig/error.hpp"
#include "cycsig/paritylab.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

using namespace cycsig;

namespace {

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected cycsig::Error");
    return Errc::ParseError;
}

std::vector<ClassParityRecord> parse(const std::string& text) {
    std::istringstream in(text);
    return parse_class_data(in);
}

Status status(const Prop1Report& r, std::string_view id) { return r.statement(id).status; }
Provenance provenance(const Prop1Report& r, std::string_view id) { return r.statement(id).provenance; }

constexpr const char* kHeader = "p,n,h_K,h_minus,h_Kplus,h_strict_Kplus,source\n";

} // namespace

TEST_CASE("load_class_data") {
    const auto bundled = bundled_class_data();
    const auto r29 = find_record(bundled, Modulus(29, 1));
    REQUIRE(r29);
    CHECK(r29->h_K == Parity::Even);
    CHECK(r29->h_Kplus == Parity::Odd);
    const auto r163 = find_record(bundled, Modulus(163, 1));
    REQUIRE(r163);
    CHECK(r163->h_minus == Parity::Even);
    CHECK(r163->h_Kplus == Parity::Even);
    for (int n = 2; n <= 7; ++n) CHECK(find_record(bundled, Modulus(2, n)));
    CHECK_FALSE(find_record(bundled, Modulus(7, 1)));

    const auto from_file = load_class_data(std::string(CYCSIG_DATA_DIR "/class_parity.csv"));
    REQUIRE(from_file.size() == bundled.size());
    for (std::size_t i = 0; i < bundled.size(); ++i) {
        CHECK(from_file[i].p == bundled[i].p);
        CHECK(from_file[i].n == bundled[i].n);
        CHECK(from_file[i].h_K == bundled[i].h_K);
        CHECK(from_file[i].h_strict_Kplus == bundled[i].h_strict_Kplus);
        CHECK(from_file[i].source == bundled[i].source);
    }

    const auto quoted = parse(std::string(kHeader) + "# comment\n\n7,1,odd,odd,odd,odd,\"tables, p. 1\"\n");
    REQUIRE(quoted.size() == 1);
    CHECK(quoted[0].source == "tables, p. 1");
}

TEST_CASE("load_class_data errors") {
    CHECK(error_of([] { parse(std::string(kHeader) + "29,1,odd,even,odd,unknown,x\n"); }) ==
          Errc::InconsistentParities);
    CHECK(error_of([] { parse(std::string(kHeader) + "29,1,even,odd,odd,unknown,x\n"); }) ==
          Errc::InconsistentParities);
    CHECK(error_of([] { parse(std::string(kHeader) + "29,1,unknown,unknown,even,odd,x\n"); }) ==
          Errc::InconsistentParities);
    CHECK(error_of([] { parse("p,n,h\n"); }) == Errc::ParseError);
    CHECK(error_of([] { parse(""); }) == Errc::ParseError);
    CHECK(error_of([] { parse(std::string(kHeader) + "29,1,maybe,odd,odd,odd,x\n"); }) == Errc::ParseError);
    CHECK(error_of([] { parse(std::string(kHeader) + "29,one,odd,odd,odd,odd,x\n"); }) == Errc::ParseError);
    CHECK(error_of([] { parse(std::string(kHeader) + "29,1,odd\n"); }) == Errc::ParseError);
    CHECK(error_of([] { load_class_data("/nonexistent/parities.csv"); }) == Errc::ParseError);
}

TEST_CASE("evaluate_prop1 for p = 29") {
    const Modulus m(29, 1);
    const auto r29 = static_cast<std::int64_t>(rank(signature_matrix(m)));
    REQUIRE(r29 < 14);
    const auto rep = evaluate_prop1(m, r29, std::nullopt, find_record(bundled_class_data(), m));
    CHECK(status(rep, "6") == Status::Fails);
    CHECK(provenance(rep, "6") == Provenance::Computed);
    CHECK(status(rep, "a1") == Status::Holds);
    CHECK(provenance(rep, "a1") == Provenance::FromData);
    CHECK(status(rep, "a2") == Status::Holds);
    CHECK(status(rep, "a3") == Status::Holds);
    CHECK(provenance(rep, "a3") == Provenance::Inferred);
    for (auto id : {"1", "2", "3", "4"}) CHECK(status(rep, id) == Status::Fails);
    CHECK(provenance(rep, "1") == Provenance::FromData);
    CHECK(provenance(rep, "3") == Provenance::Inferred);
    for (auto id : {"b1", "b2", "b3"}) {
        CHECK(status(rep, id) == Status::Fails);
        CHECK(provenance(rep, id) == Provenance::Inferred);
    }
}

TEST_CASE("evaluate_prop1 for p = 163") {
    const Modulus m(163, 1);
    ClassParityRecord only_minus{163, 1, Parity::Unknown, Parity::Even, Parity::Unknown, Parity::Unknown, "h^-"};
    const auto rep = evaluate_prop1(m, 79, 81, only_minus);
    CHECK(status(rep, "b3") == Status::Holds);
    CHECK(provenance(rep, "b3") == Provenance::Computed);
    CHECK(status(rep, "b1") == Status::Holds);
    CHECK(status(rep, "b2") == Status::Holds);
    for (auto id : {"1", "2", "3", "4", "6"}) CHECK(status(rep, id) == Status::Fails);
    CHECK(provenance(rep, "2") == Provenance::FromData);
    for (auto id : {"a1", "a2", "a3"}) {
        CHECK(status(rep, id) == Status::Fails);
        CHECK(provenance(rep, id) == Provenance::Inferred);
    }

    // Without augmentation nothing decides the (a)/(b) split.
    const auto bare = evaluate_prop1(m, 79, std::nullopt, std::nullopt);
    for (auto id : {"a1", "a2", "a3", "b1", "b2", "b3"}) CHECK(status(bare, id) == Status::Unknown);
    // A deficient augmented rank proves nothing about (b).
    const auto partial = evaluate_prop1(m, 79, 80, std::nullopt);
    CHECK(status(partial, "b3") == Status::Unknown);
}

TEST_CASE("evaluate_prop1 for p = 2") {
    for (int n = 2; n <= 7; ++n) {
        const Modulus m(2, n);
        const auto r = static_cast<std::int64_t>(rank(signature_matrix(m)));
        for (const auto& data : {std::optional<ClassParityRecord>{}, find_record(bundled_class_data(), m)}) {
            const auto rep = evaluate_prop1(m, r, std::nullopt, data);
            for (const auto& s : rep.statements) CHECK(s.status == Status::Holds);
        }
    }
}

TEST_CASE("contradictions") {
    const Modulus m29(29, 1);
    ClassParityRecord odd{29, 1, Parity::Odd, Parity::Odd, Parity::Odd, Parity::Odd, "bogus"};
    CHECK(error_of([&] { evaluate_prop1(m29, 11, std::nullopt, odd); }) == Errc::Contradiction);
    // h(K) even but h^- odd contradicts (1) <=> (2).
    ClassParityRecord split{29, 1, Parity::Even, Parity::Odd, Parity::Unknown, Parity::Unknown, "bogus"};
    CHECK(error_of([&] { evaluate_prop1(m29, 11, std::nullopt, split); }) == Errc::Contradiction);
    // Full augmented rank with (a1) true would force (1) true, against rank 11.
    ClassParityRecord a_only{29, 1, Parity::Unknown, Parity::Unknown, Parity::Odd, Parity::Unknown, "x"};
    CHECK(error_of([&] { evaluate_prop1(m29, 11, 14, a_only); }) == Errc::Contradiction);

    CHECK(error_of([&] { evaluate_prop1(m29, 0, std::nullopt, std::nullopt); }) == Errc::RankOutOfRange);
    CHECK(error_of([&] { evaluate_prop1(m29, 11, 10, std::nullopt); }) == Errc::RankOutOfRange);
    CHECK(error_of([&] { evaluate_prop1(m29, 11, 15, std::nullopt); }) == Errc::RankOutOfRange);
    ClassParityRecord other{31, 1, Parity::Odd, Parity::Odd, Parity::Odd, Parity::Odd, "x"};
    CHECK(error_of([&] { evaluate_prop1(m29, 11, std::nullopt, other); }) == Errc::InconsistentParities);
}

TEST_CASE("closure properties over all parity combinations") {
    const Modulus m(163, 1);
    const Parity all[] = {Parity::Odd, Parity::Even, Parity::Unknown};
    int evaluated = 0;
    for (auto hk : all)
        for (auto hm : all)
            for (auto hp : all)
                for (auto hs : all)
                    for (std::int64_t rank_c : {79L, 81L})
                        for (std::optional<std::int64_t> aug : {std::optional<std::int64_t>{}, std::optional<std::int64_t>{81}}) {
                            ClassParityRecord d{163, 1, hk, hm, hp, hs, ""};
                            try {
                                validate(d);
                            } catch (const Error&) {
                                continue;
                            }
                            Prop1Report rep = [&] {
                                try {
                                    return evaluate_prop1(m, rank_c, aug, d);
                                } catch (const Error& e) {
                                    CHECK(e.code() == Errc::Contradiction);
                                    return Prop1Report{m, 0, std::nullopt, {}};
                                }
                            }();
                            if (rep.circular_rank == 0) continue;
                            ++evaluated;
                            // Idempotent closure.
                            Prop1Report again = rep;
                            close_statuses(again);
                            for (std::size_t i = 0; i < rep.statements.size(); ++i) {
                                CHECK(again.statements[i].status == rep.statements[i].status);
                                CHECK(again.statements[i].provenance == rep.statements[i].provenance);
                            }
                            // (6) => everything.
                            if (status(rep, "6") == Status::Holds) {
                                for (const auto& s : rep.statements) CHECK(s.status == Status::Holds);
                            }
                            // Equivalent statements never disagree.
                            for (auto group : {std::vector<std::string_view>{"1", "2", "3", "4", "6"},
                                               std::vector<std::string_view>{"a1", "a2", "a3"},
                                               std::vector<std::string_view>{"b1", "b2", "b3"}}) {
                                bool holds = false, fails = false;
                                for (auto id : group) {
                                    holds = holds || status(rep, id) == Status::Holds;
                                    fails = fails || status(rep, id) == Status::Fails;
                                }
                                CHECK_FALSE((holds && fails));
                            }
                        }
    CHECK(evaluated > 10);
}

TEST_CASE("parity arithmetic of h(K) = h^- h(K+)") {
    const Parity known[] = {Parity::Odd, Parity::Even};
    for (auto hm : known) {
        for (auto hp : known) {
            const Parity hk = (hm == Parity::Odd && hp == Parity::Odd) ? Parity::Odd : Parity::Even;
            const Parity wrong = hk == Parity::Odd ? Parity::Even : Parity::Odd;
            CHECK_NOTHROW(validate({7, 1, hk, hm, hp, Parity::Unknown, ""}));
            CHECK(error_of([&] { validate({7, 1, wrong, hm, hp, Parity::Unknown, ""}); }) ==
                  Errc::InconsistentParities);
        }
    }
}

TEST_CASE("emit_report") {
    const Modulus m(163, 1);
    const auto rep = evaluate_prop1(m, 79, 81, find_record(bundled_class_data(), m));
    const auto j = nlohmann::json::parse(emit_report(rep, ReportFormat::Json));
    CHECK(j["modulus"]["p"] == 163);
    CHECK(j["modulus"]["half_degree"] == 81);
    CHECK(j["ranks"]["circular"] == 79);
    CHECK(j["ranks"]["augmented"] == 81);
    CHECK(j["ranks"]["C_to_Cplus_exp"] == 79);
    CHECK(j["ranks"]["Cplus_to_Csq_exp"] == 2);
    CHECK(j["statements"]["6"]["status"] == "fails");
    CHECK(j["statements"]["b3"]["status"] == "holds");
    CHECK(j["statements"]["b3"]["provenance"] == "computed");
    CHECK(j["statements"].size() == 11);
    CHECK(emit_report(rep, ReportFormat::Json) == emit_report(rep, ReportFormat::Json));

    const std::string text = emit_report(rep, ReportFormat::Text);
    CHECK(text.find("[C:C+] = 2^79") != std::string::npos);
    CHECK(text.find("[C+:C^2] = 2^2") != std::string::npos);
    CHECK(text.find("(b3)") != std::string::npos);

    // No data: nothing is from-data, and the (a)/(b) split stays open.
    const auto empty = evaluate_prop1(m, 79, std::nullopt, std::nullopt);
    const auto je = nlohmann::json::parse(emit_report(empty, ReportFormat::Json));
    CHECK(je["ranks"]["augmented"].is_null());
    for (const auto& [id, s] : je["statements"].items()) CHECK(s["provenance"] != "from-data");
    for (auto id : {"a1", "a2", "a3", "b1", "b2", "b3"}) {
        CHECK(je["statements"][id]["status"] == "unknown");
        CHECK(je["statements"][id]["provenance"] == "none");
    }
}
