#include "oracles.hpp"

#include "tnil/errors.hpp"
#include "tnil/series.hpp"

#include <gtest/gtest.h>

using namespace tnil;

namespace {

LaurentPoly L(const char* s) { return parse_laurent(s); }

// Commutators [g, x] for generators g of a small explicit subgroup and x in
// {a, a^b, b}, computed in the group; used to check lcs_step.
bool contains(const SubgroupData& s, const G2Elem& g, const Model& model)
{
    if (s.b_part == 0 && g.j != 0)
        return false;
    if (!s.module.contains(g.n))
        return false;
    if (!s.module.is_zero())
        return true;
    if (model.kind == ModelKind::H)
        return true;
    Integer c = model.kind == ModelKind::GammaK ? mod_pow2(g.c, model.k) : g.c;
    if (c == 0)
        return true;
    if (!s.center_exponent)
        return false;
    return mod(c, pow2(*s.center_exponent)) == 0;
}

} // namespace

TEST(LowerCentral, HIndices)
{
    auto chain = lcs_chain(Model::h(), 12);
    ASSERT_EQ(chain.size(), 12u);
    Integer expected = 1;
    for (int i = 1; i <= 12; ++i) {
        auto index = chain[i - 1].module.index();
        ASSERT_TRUE(index.has_value());
        EXPECT_EQ(*index, expected) << "i=" << i;
        EXPECT_EQ(chain[i - 1].module, h_module_stage(i));
        expected *= 3;
    }
    EXPECT_EQ(chain[0], whole_group(Model::h()));
    EXPECT_EQ(chain[1].b_part, 0);
}

TEST(LowerCentral, GammaKCenterConstant)
{
    for (unsigned k = 1; k <= 8; ++k) {
        auto chain = lcs_chain(Model::gamma(k), 12);
        for (int i = 2; i <= 12; ++i) {
            ASSERT_TRUE(chain[i - 1].center_exponent.has_value());
            EXPECT_EQ(*chain[i - 1].center_exponent, 0u);
            EXPECT_EQ(chain[i - 1].module, h_module_stage(i));
            EXPECT_EQ(chain[i - 1].center_order(Model::gamma(k)), pow2(k));
        }
    }
}

TEST(LowerCentral, StepAgreesWithCommutators)
{
    // Every commutator of a subgroup generator with a group generator lies in
    // the computed next stage, for the first stages of G2 and Gamma_k.
    std::mt19937_64 rng(71);
    for (Model model : {Model::g2(), Model::gamma(3), Model::h()}) {
        auto chain = lcs_chain(model, 5);
        const std::vector<G2Elem> gens = {G2Elem::a(), G2Elem{0, {0, 1}, 0}, G2Elem::b(), G2Elem::t()};
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            for (int trial = 0; trial < 200; ++trial) {
                // random element of chain[i]
                G2Elem g;
                const auto& basis = chain[i].module.basis();
                for (const auto& v : basis)
                    g.n += Integer(oracle::draw(rng, -3, 3)) * v;
                if (chain[i].center_exponent)
                    g.c = Integer(oracle::draw(rng, -4, 4)) * pow2(*chain[i].center_exponent);
                if (!chain[i].module.is_zero())
                    g.c = oracle::draw(rng, -4, 4);
                if (chain[i].b_part)
                    g.j = oracle::draw(rng, -2, 2);
                // the module coordinates above are in the (a, a^b) basis; with
                // b present the lift t^c x^n b^j is still in the subgroup
                for (const auto& x : gens) {
                    G2Elem comm = commutator(g, x);
                    EXPECT_TRUE(contains(chain[i + 1], comm, model))
                        << model.to_string() << " stage " << i + 1 << " " << g.to_string();
                }
            }
        }
    }
}

TEST(LowerCentral, GammaTwoContainsT)
{
    auto chain = lcs_chain(Model::gamma(4), 2);
    EXPECT_EQ(chain[1].center_exponent, std::optional<unsigned>(0));
    EXPECT_EQ(*chain[1].module.index(), 3);
}

TEST(GammaOmega, Certificates)
{
    std::vector<ModuleVec> probes;
    for (int x = -20; x <= 20; ++x)
        for (int y = -20; y <= 20; ++y)
            if (x != 0 || y != 0)
                probes.push_back({x, y});

    auto g3 = gamma_omega(Model::gamma(3), 12, probes);
    EXPECT_TRUE(g3.passed());
    ASSERT_TRUE(g3.order.has_value());
    EXPECT_EQ(*g3.order, 8);
    for (const auto& p : g3.probes) {
        ASSERT_TRUE(p.exit_stage.has_value());
        EXPECT_LE(*p.exit_stage, 40);
    }

    auto one = gamma_omega(Model::gamma(3), 12, {{1, 0}});
    EXPECT_EQ(one.probes[0].exit_stage, std::optional<int>(2));

    auto h = gamma_omega(Model::h(), 12, probes);
    EXPECT_TRUE(h.passed());
    EXPECT_TRUE(h.gamma_omega.is_trivial());
    EXPECT_EQ(h.order, std::optional<Integer>(1));
}

TEST(GammaOmega, ProbeExitMatchesThreeAdicValuation)
{
    // v lies in N (U - I)^{i-1} iff 3^{i-1} divides... checked with an explicit
    // solve: (U - I) has det -3 and the chain is a chain of index-3 steps.
    const IntMatrix2 D = action_matrix() - IntMatrix2::identity();
    for (int x = -9; x <= 9; ++x) {
        for (int y = -9; y <= 9; ++y) {
            if (x == 0 && y == 0)
                continue;
            // Least i with v not in image(D^{i-1}), found by repeated solving v = w D.
            ModuleVec v{x, y};
            int i = 1;
            while (true) {
                // w = v adj(D) / det(D)
                ModuleVec w = v * D.adjugate();
                Integer d = D.det();
                if (w.x1 % d != 0 || w.x2 % d != 0)
                    break;
                v = {w.x1 / d, w.x2 / d};
                ++i;
            }
            auto probe = intersect_chain_probe({x, y}, h_module_stage, 100);
            ASSERT_TRUE(probe.has_value());
            EXPECT_EQ(*probe, i + 1) << x << "," << y;
        }
    }
}

TEST(Transfinite, GammaKOrders)
{
    auto chain = transfinite_chain(Model::gamma(3), 10);
    std::vector<Integer> orders;
    for (auto& st : chain)
        orders.push_back(*st.order);
    EXPECT_EQ(orders, (std::vector<Integer>{8, 4, 2, 1}));
    EXPECT_EQ(chain[0].j, 0);

    for (unsigned k = 0; k <= 8; ++k) {
        auto c = transfinite_chain(Model::gamma(k), 20);
        ASSERT_EQ(c.size(), k + 1);
        EXPECT_TRUE(c.back().subgroup.is_trivial());
        for (std::size_t j = 0; j + 1 < c.size(); ++j)
            EXPECT_EQ(*c[j].order / *c[j + 1].order, 2);
    }
    auto short_chain = transfinite_chain(Model::gamma(5), 2);
    EXPECT_EQ(short_chain.size(), 3u);
}

TEST(Transfinite, ChainMatchesIteratedCommutatorsInGammaK)
{
    // gamma_{omega+j}(Gamma_k) = <t^{2^j}>: [t^{2^j}, b] generates the next one.
    for (unsigned k = 1; k <= 6; ++k) {
        const auto B = GammaKElem::b(k);
        GammaKElem x = GammaKElem::t(k);
        for (unsigned j = 0; j <= k; ++j) {
            EXPECT_EQ(x, GammaKElem(k, pow2(j) * (j % 2 ? -1 : 1), {}, 0));
            x = commutator(x, B);
        }
    }
}

TEST(Transfinite, CommutatorPreimage)
{
    EXPECT_EQ(commutator_preimage(Dyadic(1, 1)), Dyadic(3, 2));
    EXPECT_EQ(commutator_preimage(Dyadic(0, 0)), Dyadic(0, 0));
    EXPECT_EQ(commutator_preimage(Dyadic(3, 3)), Dyadic(13, 4));
    std::mt19937_64 rng(73);
    for (int i = 0; i < 1000; ++i) {
        Dyadic c(oracle::draw(rng, 0, 4095), static_cast<unsigned long>(oracle::draw(rng, 0, 12)));
        Dyadic y = commutator_preimage(c);
        EXPECT_EQ(Integer(-2) * y, c);
    }
}

TEST(Witness, SpecExample)
{
    auto report = witness_not_transfinitely_nilpotent({L("1-b+b^2")}, 20, {Dyadic(1, 1), Dyadic(3, 2), Dyadic(5, 3)});
    EXPECT_TRUE(report.passed());
    EXPECT_GE(report.top_level, 3u + 20u);
    for (auto& s : report.samples) {
        EXPECT_TRUE(s.in_gamma_omega);
        EXPECT_TRUE(s.dyadic_verified);
        EXPECT_TRUE(s.model_verified);
        EXPECT_EQ(s.preimage_chain.size(), 21u);
        EXPECT_EQ(s.preimage_chain.front(), s.c);
    }
}

TEST(Witness, ZeroDepth)
{
    auto report = witness_not_transfinitely_nilpotent({L("1-b+b^2")}, 0, {Dyadic(1, 1)});
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.samples[0].preimage_chain.size(), 1u);
}

TEST(Witness, NeedsEvenEdge)
{
    EXPECT_THROW(witness_not_transfinitely_nilpotent({L("b")}, 3, {Dyadic(1, 1)}), PreconditionError);
}

TEST(Witness, Samples)
{
    auto s = dyadic_samples(10, 64);
    EXPECT_LE(s.size(), 64u);
    EXPECT_GE(s.size(), 50u);
    EXPECT_EQ(s, dyadic_samples(10, 64));
    unsigned long max_k = 0;
    for (auto& d : s) {
        EXPECT_EQ(d.num() % 2, 1);
        max_k = std::max(max_k, d.k());
    }
    EXPECT_EQ(max_k, 10u);
}
