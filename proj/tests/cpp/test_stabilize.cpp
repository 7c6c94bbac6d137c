#include <doctest.h>

#include "taugen/io.hpp"
#include "taugen/stabilize.hpp"

using namespace taugen;

namespace {

DiffSystem system_of(const std::string& equations, std::uint32_t n) {
    std::string text = "taugen-system 1\nfield: Q\nn: " + std::to_string(n) +
                       "\n\n[equations]\n" + equations + "\n";
    return DiffSystem::from_file(parse_system_file(text, "<test>"));
}

std::vector<std::string> basis_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.groebner_basis()) out.push_back(print_poly(g));
    return out;
}

} // namespace

TEST_CASE("second-order linear system stabilizes at r = 2 with frozen bases") {
    StabilizeResult res = stabilize(system_of("x1'' = x1'", 1), false, 0);
    CHECK(res.trace.r == 2);
    CHECK(res.trace.d == std::vector<int>{1, 1, 0, 0});
    CHECK(res.stacked_n == 3);
    REQUIRE(res.check.accepted);
    const GoodPair& P = *res.check.pair;

    CHECK(basis_strings(P.V.ideal) == std::vector<std::string>{"x3 - x2"});
    CHECK(basis_strings(P.W.ideal) ==
          std::vector<std::string>{"x3 - x2", "u1 - x2", "u2 - x2", "u3 - x2"});
    CHECK(P.certificate.m == 0);
}

TEST_CASE("riccati equation stabilizes at r = 1 with the graph closure") {
    StabilizeResult res = stabilize(system_of("x1' = x1^2", 1), false, 0);
    CHECK(res.trace.r == 1);
    CHECK(res.trace.d == std::vector<int>{1, 0, 0});
    CHECK(res.stacked_n == 2);
    REQUIRE(res.check.accepted);
    const GoodPair& P = *res.check.pair;

    ParseContext cx{GroundField::Q, 2, false, false};
    ParseContext cu{GroundField::Q, 2, true, false};
    CHECK(P.V.ideal.equals(Ideal(GroundField::Q, x_block(2), {parse_poly("x2 - x1^2", cx)})));
    CHECK(P.W.ideal.equals(Ideal(GroundField::Q, xu_block(2),
                                 {parse_poly("x2 - x1^2", cu), parse_poly("u1 - x2", cu),
                                  parse_poly("u2 - 2*x1*x2", cu)})));
    // the reduced basis completes the listed generators with one S-pair residue
    CHECK(P.W.ideal.contains(parse_poly("x1*u2 - 2*x2^2", cu)));
}

TEST_CASE("increments are weakly decreasing and start within the coordinate count") {
    for (const char* text : {"x1'' = x1'", "x1' = x1^2", "x1' = x1"}) {
        StabilizeResult res = stabilize(system_of(text, 1), false, 0);
        REQUIRE(!res.trace.d.empty());
        CHECK(res.trace.d.front() <= 1);
        for (std::size_t i = 0; i + 1 < res.trace.d.size(); ++i)
            CHECK(res.trace.d[i] >= res.trace.d[i + 1]);
        CHECK(res.trace.d.back() == 0);
    }

    StabilizeResult rotation = stabilize(system_of("x1' = x2\nx2' = -x1", 2), false, 0);
    CHECK(rotation.trace.d == std::vector<int>{2, 0, 0});
    REQUIRE(rotation.check.accepted);
    CHECK(rotation.trace.r == 1);
    CHECK(rotation.stacked_n == 4);
    CHECK(rotation.check.pair->W.primality == "constructed:graph");
    ParseContext c4{GroundField::Q, 4, true, false};
    CHECK(rotation.check.pair->W.ideal.contains(parse_poly("u3 + x1", c4)));
    CHECK(rotation.check.pair->W.ideal.contains(parse_poly("u4 + x2", c4)));
}

TEST_CASE("prolongation ideals are recorded along the trace") {
    StabilizeResult res = stabilize(system_of("x1'' = x1'", 1), false, 0);
    REQUIRE(res.trace.prolongation_ideals.size() == res.trace.d.size());
    ParseContext c{GroundField::Q, 1, false, true};
    // J_2 lives over x1, x1', x1'' and pins the top equation
    CHECK(res.trace.prolongation_ideals[2].contains(parse_poly("x1'' - x1'", c)));
    CHECK(res.trace.prolongation_ideals[3].contains(parse_poly("x1^(3) - x1'", c)));
}
