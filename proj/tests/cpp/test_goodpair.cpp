#include <doctest.h>

#include "taugen/goodpair.hpp"
#include "taugen/io.hpp"

using namespace taugen;

namespace {

Polynomial P(const std::string& s, std::uint32_t n, GroundField f = GroundField::Q) {
    return parse_poly(s, ParseContext{f, n, true, false});
}

std::string form_str(const LinearFiberForm& f, GroundField field) {
    auto one = Polynomial::constant(field, Rational(1));
    auto rat = [&](const RatExpr& e) {
        if (e.den == one) return print_poly(e.num);
        return "(" + print_poly(e.num) + ")/(" + print_poly(e.den) + ")";
    };
    std::string s = "u" + std::to_string(f.target) + " = " + rat(f.constant);
    for (auto& c : f.coeffs) s += " ; " + rat(c);
    return s;
}

} // namespace

TEST_CASE("graph pair on the affine line") {
    VarietyPresentation V = make_v_presentation(GroundField::Q, 1, {}, "constructed:affine");
    CheckResult res = build_graph_pair(V, {RatExpr::of(P("x1^2", 1))}, false, 0);
    REQUIRE(res.accepted);
    const GoodPair& pair = *res.pair;
    CHECK(pair.certificate.containment_ok);
    CHECK(pair.certificate.projection_ok);
    CHECK(pair.certificate.m == 0);
    CHECK(pair.certificate.basis_indices.empty());
    REQUIRE(pair.certificate.fiber_forms.size() == 1);
    CHECK(form_str(pair.certificate.fiber_forms[0], GroundField::Q) == "u1 = x1^2");
    CHECK(pair.W.ideal.contains(P("u1 - x1^2", 1)));
    CHECK(pair.W.primality == "constructed:graph");
}

TEST_CASE("bundle pair over the circle") {
    std::uint32_t n = 2;
    VarietyPresentation V = make_v_presentation(
        GroundField::Q, n, {P("x1^2 + x2^2 - 1", n)}, "constructed:hypersurface");
    // W = tau V: zero section with direction (-x2, x1), the tangent line field
    CheckResult res = build_bundle_pair(
        V, {RatExpr::zero(GroundField::Q), RatExpr::zero(GroundField::Q)},
        {{RatExpr::of(P("-x2", n)), RatExpr::of(P("x1", n))}}, false, 0);
    REQUIRE(res.accepted);
    const GoodPairCertificate& c = res.pair->certificate;
    CHECK(c.m == 1);
    CHECK(c.basis_indices == std::vector<std::uint32_t>{1});
    REQUIRE(c.fiber_forms.size() == 1);
    // the lone non-basis coordinate: u2 = (-x1/x2) u1
    CHECK(form_str(c.fiber_forms[0], GroundField::Q) == "u2 = 0 ; (-x1)/(x2)");
}

TEST_CASE("checking a handwritten manifest matches the construction") {
    std::string text = "taugen-pair 1\nfield: Q\nn: 2\nprimality: constructed:bundle\n[V]\n"
                       "x1^2 + x2^2 - 1\n[W]\nx1^2 + x2^2 - 1\nx1*u1 + x2*u2\n";
    PairManifest man = parse_pair_manifest(text, "manifest");
    CheckResult res =
        check_good_pair(v_from_manifest(man), w_from_manifest(man), false, 0, man.point);
    REQUIRE(res.accepted);
    CHECK(res.pair->certificate.m == 1);
    CHECK(res.pair->certificate.basis_indices == std::vector<std::uint32_t>{1});
}

TEST_CASE("condition (iii) failure: fibers are not affine") {
    VarietyPresentation V = make_v_presentation(GroundField::Q, 1, {}, "constructed:affine");
    VarietyPresentation W =
        make_w_presentation(GroundField::Q, 1, {P("u1^2 - x1", 1)}, "constructed:hypersurface");
    CheckResult res = check_good_pair(V, W, false, 0);
    CHECK(!res.accepted);
    CHECK(res.failed_condition == "(iii)");
    CHECK(!res.pair.has_value());
}

TEST_CASE("condition (ii) failure: projection misses the generic point") {
    VarietyPresentation V = make_v_presentation(GroundField::Q, 1, {}, "constructed:affine");
    VarietyPresentation W =
        make_w_presentation(GroundField::Q, 1, {P("x1", 1), P("u1", 1)}, "constructed:affine");
    CheckResult res = check_good_pair(V, W, false, 0);
    CHECK(!res.accepted);
    CHECK(res.failed_condition == "(ii)");
}

TEST_CASE("condition (i) failure: W escapes the prolongation") {
    // V = V(x1): tau V forces u1 = 0, but W claims u1 = 1
    VarietyPresentation V =
        make_v_presentation(GroundField::Q, 1, {P("x1", 1)}, "constructed:hypersurface");
    VarietyPresentation W = make_w_presentation(GroundField::Q, 1, {P("x1", 1), P("u1 - 1", 1)},
                                                "constructed:affine");
    CheckResult res = check_good_pair(V, W, false, 0);
    CHECK(!res.accepted);
    CHECK(res.failed_condition == "(i)");
}

TEST_CASE("asserted primality needs the permissive flag") {
    VarietyPresentation V = make_v_presentation(GroundField::Q, 1, {}, "asserted");
    VarietyPresentation W = make_w_presentation(GroundField::Q, 1, {P("u1", 1)}, "asserted");
    CHECK_THROWS_AS(check_good_pair(V, W, false, 0), PrimalityEvidenceError);

    CheckResult res = check_good_pair(V, W, true, 0);
    REQUIRE(res.accepted);
    CHECK(res.warning == "primality of the pair is asserted without evidence");
}

TEST_CASE("tagged families are re-validated, not trusted") {
    // claims "affine" but the ideal is a parabola
    VarietyPresentation V = make_v_presentation(GroundField::Q, 1, {}, "constructed:affine");
    VarietyPresentation W =
        make_w_presentation(GroundField::Q, 1, {P("u1 - x1^2", 1)}, "constructed:affine");
    CheckResult res = check_good_pair(V, W, false, 0);
    CHECK(!res.accepted);
    CHECK(res.failed_condition == "primality");

    // claims "hypersurface" but the generator factors over Q
    VarietyPresentation W2 =
        make_w_presentation(GroundField::Q, 1, {P("u1^2 - 1", 1)}, "constructed:hypersurface");
    CheckResult res2 = check_good_pair(V, W2, false, 0);
    CHECK(!res2.accepted);
    CHECK(res2.failed_condition == "primality");

    // a hypersurface the certifier can neither certify nor refute is treated
    // like an asserted pair: strict mode refuses, permissive mode goes on
    VarietyPresentation W3 = make_w_presentation(GroundField::Q, 1, {P("u1^2 - x1^2", 1)},
                                                 "constructed:hypersurface");
    CHECK_THROWS_AS(check_good_pair(V, W3, false, 0), PrimalityEvidenceError);
    CheckResult res3 = check_good_pair(V, W3, true, 0);
    CHECK(!res3.accepted);
    CHECK(res3.failed_condition == "(iii)");
    CHECK(!res3.warning.empty());
}

TEST_CASE("graph pair over Q(t)") {
    ParseContext ct{GroundField::Qt, 1, true, false};
    VarietyPresentation V = make_v_presentation(
        GroundField::Qt, 1, {parse_poly("x1^2 - t", ct)}, "constructed:hypersurface");
    // x1' = 1/(2 x1) = x1/(2t) on V
    CheckResult res = build_graph_pair(
        V, {RatExpr(parse_poly("x1", ct), parse_poly("2*t", ct))}, false, 0);
    REQUIRE(res.accepted);
    CHECK(res.pair->certificate.m == 0);
    CHECK(res.pair->W.ideal.contains(parse_poly("2*x1*u1 - 1", ct)));
}

TEST_CASE("degenerate graph denominators are rejected") {
    // V = V(x1), map u1 = 1/x1: the denominator vanishes on all of V
    VarietyPresentation V =
        make_v_presentation(GroundField::Q, 1, {P("x1", 1)}, "constructed:hypersurface");
    CHECK_THROWS_AS(build_graph_pair(V, {RatExpr(P("1", 1), P("x1", 1))}, false, 0),
                    DegenerateDenominatorError);
}

TEST_CASE("manifest round trip through a pair") {
    VarietyPresentation V = make_v_presentation(GroundField::Q, 1, {}, "constructed:affine");
    CheckResult res = build_graph_pair(V, {RatExpr::of(P("x1^2", 1))}, false, 0);
    REQUIRE(res.accepted);
    PairManifest man = manifest_from_pair(*res.pair, "demo");
    CHECK(man.recipe == "demo");
    PairManifest back = parse_pair_manifest(format_pair_manifest(man), "manifest");
    CheckResult res2 =
        check_good_pair(v_from_manifest(back), w_from_manifest(back), false, 0, back.point);
    REQUIRE(res2.accepted);
    CHECK(res2.pair->certificate.m == 0);
}
