#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/curve_config.hpp"
#include "mcg/errors.hpp"
#include "mcg/relations.hpp"
#include "mcg/representation.hpp"
#include "mcg/slope.hpp"
#include "mcg/word.hpp"

#include <sstream>

using namespace mcg;

namespace {

Word w(const char* text) { return parse_word(text); }

Binding standard_torus() {
    Binding b;
    b.bind_slope("a", Slope::zero());
    b.bind_slope("b", Slope::infinity());
    return b;
}

} // namespace

TEST_CASE("word evaluation") {
    Binding b = standard_torus();
    CHECK(evaluate_word(w("a"), b, SurfaceKind::OneHoledTorus) == IntMat2{1, 0, -1, 1});
    CHECK(evaluate_word(w(""), b, SurfaceKind::OneHoledTorus) == IntMat2::identity());
    CHECK(evaluate_word(w("a a'"), b, SurfaceKind::OneHoledTorus) == IntMat2::identity());
    CHECK(evaluate_word(w("a b"), b, SurfaceKind::OneHoledTorus) ==
          IntMat2{1, 0, -1, 1} * IntMat2{1, 1, 0, 1});
    CHECK_THROWS_AS(evaluate_word(w("zz"), b, SurfaceKind::OneHoledTorus), unbound_label_error);
}

TEST_CASE("binding file parsing") {
    std::istringstream in("bind a 0/1\nbind b 1/0   # crossing pair\nbind d boundary\n");
    Binding b = Binding::parse(in, "inline");
    CHECK(b.is_bound("a"));
    REQUIRE(b.slope_if_any("a") != nullptr);
    CHECK(*b.slope_if_any("a") == Slope::zero());
    CHECK(b.slope_if_any("d") == nullptr);
    CHECK_THROWS_AS(b.slope_if_any("zz"), unbound_label_error);

    std::istringstream bad("bind a\n");
    CHECK_THROWS_AS(Binding::parse(bad, "inline"), parse_error);
}

TEST_CASE("relator verification in the torus shadow") {
    CurveConfig cfg;
    cfg.add_curve("a");
    cfg.add_curve("b");
    cfg.add_curve("ab");
    cfg.set_pair_kind("a", "b", PairKind::Perp);
    cfg.set_product("a", "b", "ab");
    Binding b = standard_torus();
    b.bind_slope("ab", resolve(Slope::zero(), Slope::infinity()));

    auto braid = instantiate(cfg, RelName::Braid, {"a", "b"});
    REQUIRE(braid.has_value());
    CHECK(verify_relation_in_rep(*braid, b, SurfaceKind::OneHoledTorus));

    auto conj = instantiate(cfg, RelName::ResConj, {"a", "b"});
    REQUIRE(conj.has_value());
    CHECK(verify_relation_in_rep(*conj, b, SurfaceKind::OneHoledTorus));
}

TEST_CASE("a false disjointness claim is caught") {
    CurveConfig cfg;
    cfg.add_curve("a");
    cfg.add_curve("b");
    cfg.set_pair_kind("a", "b", PairKind::Disjoint);
    auto commute = instantiate(cfg, RelName::Commute, {"a", "b"});
    REQUIRE(commute.has_value());
    CHECK_FALSE(verify_relation_in_rep(*commute, standard_torus(), SurfaceKind::OneHoledTorus));
}

TEST_CASE("lantern word on the sphere gives minus identity") {
    Binding b;
    b.bind_slope("a", Slope::zero());
    b.bind_slope("b", Slope::infinity());
    b.bind_slope("ab", Slope(-1, 1));
    IntMat2 value = evaluate_word(w("a b ab"), b, SurfaceKind::FourHoledSphere);
    CHECK(value == IntMat2::identity().negated());
    CHECK(action_trivial_on_slopes(w("a b ab"), b, SurfaceKind::FourHoledSphere, 25));
    CHECK_FALSE(action_trivial_on_slopes(w("a"), b, SurfaceKind::FourHoledSphere, 1));
    CHECK(action_trivial_on_slopes(w(""), b, SurfaceKind::FourHoledSphere, 10));
}

TEST_CASE("chain relator with a slope-bound boundary is rejected on the torus") {
    CurveConfig cfg;
    cfg.add_curve("a");
    cfg.add_curve("b");
    cfg.add_curve("d");
    cfg.set_pair_kind("a", "b", PairKind::Perp);
    cfg.set_boundary("a", "b", {"d"});
    auto chain = instantiate(cfg, RelName::Chain, {"a", "b"});
    REQUIRE(chain.has_value());

    Binding ok = standard_torus();
    ok.bind_boundary_like("d");
    CHECK(verify_relation_in_rep(*chain, ok, SurfaceKind::OneHoledTorus));

    Binding bad = standard_torus();
    bad.bind_slope("d", Slope(1, 1));
    CHECK_THROWS_AS(verify_relation_in_rep(*chain, bad, SurfaceKind::OneHoledTorus),
                    unrepresentable_error);
}

TEST_CASE("lantern relator verifies projectively on the sphere") {
    CurveConfig cfg;
    for (const char* l : {"a", "b", "ab", "d1", "d2", "d3", "d4"})
        cfg.add_curve(l);
    cfg.set_pair_kind("a", "b", PairKind::Perp0);
    cfg.set_product("a", "b", "ab");
    cfg.set_boundary("a", "b", {"d1", "d2", "d3", "d4"});
    auto lantern = instantiate(cfg, RelName::Lantern, {"a", "b"});
    REQUIRE(lantern.has_value());

    Binding b;
    b.bind_slope("a", Slope::zero());
    b.bind_slope("b", Slope::infinity());
    b.bind_slope("ab", Slope(-1, 1));
    for (const char* l : {"d1", "d2", "d3", "d4"})
        b.bind_boundary_like(l);
    CHECK(verify_relation_in_rep(*lantern, b, SurfaceKind::FourHoledSphere));
    // torus transvections do not realize a twice-crossing configuration
    CHECK_FALSE(verify_relation_in_rep(*lantern, b, SurfaceKind::OneHoledTorus));
}

TEST_CASE("braid identity holds for all neighbor transvection pairs") {
    auto slopes = slopes_up_to_height(20);
    for (const Slope& x : slopes) {
        for (const Slope& y : slopes) {
            if (!is_neighbor(x, y))
                continue;
            IntMat2 mx = twist_matrix(x, SurfaceKind::OneHoledTorus);
            IntMat2 my = twist_matrix(y, SurfaceKind::OneHoledTorus);
            CHECK(mx * my * mx == my * mx * my);
        }
    }
}

TEST_CASE("resolution is conjugation at the matrix level") {
    auto slopes = slopes_up_to_height(20);
    for (const Slope& x : slopes) {
        for (const Slope& y : slopes) {
            if (!is_neighbor(x, y))
                continue;
            IntMat2 mx = twist_matrix(x, SurfaceKind::OneHoledTorus);
            IntMat2 my = twist_matrix(y, SurfaceKind::OneHoledTorus);
            CHECK(twist_matrix(resolve(x, y), SurfaceKind::OneHoledTorus) ==
                  mx * my * mx.inverse());
            CHECK(twist_matrix(twist(x, y, 1, SurfaceKind::OneHoledTorus),
                               SurfaceKind::OneHoledTorus) == mx * my * mx.inverse());
        }
    }
}

TEST_CASE("half-twist powers on the standard pair") {
    IntMat2 ma = twist_matrix(Slope::zero(), SurfaceKind::OneHoledTorus);
    IntMat2 mb = twist_matrix(Slope::infinity(), SurfaceKind::OneHoledTorus);
    IntMat2 aba = ma * mb * ma;
    CHECK(aba == mb * ma * mb);
    CHECK(aba.pow(2) == IntMat2::identity().negated());
    CHECK(aba.pow(4) == IntMat2::identity());
}
