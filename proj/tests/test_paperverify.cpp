#include <doctest.h>

#include <regex>
#include <set>

#include "sqpaint/error.hpp"
#include "sqpaint/paperverify.hpp"

using namespace sqpaint;

TEST_CASE("registry") {
    const auto& reg = certificate_registry();
    std::set<std::string> ids;
    for (const CheckInfo& c : reg) {
        CHECK(ids.insert(c.id).second);
        CHECK_FALSE(c.citation.empty());
    }
    for (const char* must : {"fig9a_k4e", "fig10d_k6ve3", "lemma_farlinked", "lemma_threeunlinked", "lemma_b1b2",
                             "f1_closed_form", "f2_closed_form", "g_closed_form", "cycle_pendant_diff",
                             "cycle_2pendant_diff", "cycle_2pendant_edge8_diff", "elspas4_square", "elspas5_square",
                             "petersen_moore", "petersen_square", "bk15_regular", "bk15_chromatic", "lemma_c6_paint",
                             "k4_two_lister", "k3_two_lister", "chain_at_paint_choosable"}) {
        CHECK(ids.count(must) == 1);
    }
}

TEST_CASE("individual certificates") {
    const Certificate k6 = verify_certificate("fig10d_k6ve3");
    CHECK(k6.pass);
    CHECK(k6.kind == CertKind::circulation_count);
    CHECK(k6.observed == "ee=4394 eo=4393");
    const Certificate far = verify_certificate("lemma_farlinked");
    CHECK(far.pass);
    CHECK(far.observed == "|diff|=2");
    CHECK(verify_certificate("lemma_c6_paint").observed == "painter-wins");
    CHECK(verify_certificate("bk15_chromatic").pass);
    CHECK(verify_certificate("elspas4_square").pass);
    CHECK_THROWS_AS(verify_certificate("lemma_nonexistent"), InputError);
    CHECK(verify_lemma("lemma_farlinked").pass);
    CHECK(verify_structural("petersen_moore").observed == verify_certificate("petersen_moore").observed);
    CHECK_THROWS_AS(verify_lemma("petersen_moore"), InputError);
    CHECK_THROWS_AS(verify_structural("fig9a_k4e"), InputError);
}

TEST_CASE("formula ranges") {
    CHECK(verify_formula("f1_closed_form", 2, 20).pass);
    CHECK(verify_formula("g_closed_form", 4, 18).pass);
    CHECK(verify_formula("cycle_pendant_diff", 5, 13).pass);
    CHECK(verify_formula("f1_closed_form", 5, 9).pass);
    CHECK_THROWS_AS(verify_formula("f1_closed_form", 2, 40), SizeLimitError);
    CHECK_THROWS_AS(verify_formula("f2_closed_form", 2, 10), InputError);
    CHECK_THROWS_AS(verify_formula("fig9a_k4e", 2, 10), InputError);
}

TEST_CASE("full report is complete, passing and reproducible") {
    const Report a = verify_all();
    CHECK(a.certificates.size() == certificate_registry().size());
    for (std::size_t i = 0; i < a.certificates.size(); ++i) {
        CAPTURE(a.certificates[i].id);
        CHECK(a.certificates[i].id == certificate_registry()[i].id);
        CHECK(a.certificates[i].pass);
    }
    CHECK(a.ok());
    const Report b = verify_all();
    CHECK(report_json_lines(a, true) == report_json_lines(b, true));
    CHECK(report_table(a, true) == report_table(b, true));
    const std::string lines = report_json_lines(a, false);
    CHECK(lines.find("runtime_ms") != std::string::npos);
    CHECK(report_json_lines(a, true).find("runtime_ms") == std::string::npos);
    std::size_t count = 0;
    for (char c : lines) count += c == '\n';
    CHECK(count == a.certificates.size() + 1);
}

TEST_CASE("fault injection fails exactly the damaged certificate") {
    for (const CheckInfo& info : certificate_registry()) {
        CAPTURE(info.id);
        VerifyOptions o;
        o.corrupt = info.id;
        CHECK_FALSE(verify_certificate(info.id, o).pass);
    }
    for (const char* id : {"fig9c_k4ve2", "lemma_b1b2", "g_closed_form", "lemma_k4e_paint", "bk15_chromatic"}) {
        CAPTURE(id);
        VerifyOptions o;
        o.corrupt = id;
        const Report r = verify_all(o);
        CHECK(r.failed() == 1);
        for (const Certificate& c : r.certificates) CHECK(c.pass == (c.id != id));
    }
}
