#include "printers.hpp"
#include "z2rep/singular_solver.hpp"
#include "z2rep/submodule_quotient.hpp"

#include <gtest/gtest.h>

using namespace z2rep;
using G = Generator;

namespace {

std::vector<std::size_t> quotient_column(const QuotientTable& t)
{
    std::vector<std::size_t> out;
    for (const auto& row : t.per_level)
        out.push_back(row.quotient_dim);
    return out;
}

}  // namespace

TEST(WBasis, SizesAndRank)
{
    const auto kind = VermaKind::mr(-2);
    EXPECT_EQ(wbasis_family(kind, 1, 0).size(), 2u);
    EXPECT_EQ(wbasis_family(kind, 1, 3).size(), 8u);
    const auto level = submodule_basis(kind, 1, 2);
    EXPECT_EQ(level.basis.size(), 6u);
    EXPECT_EQ(level.rank, 6u);
    const auto lk = VermaKind::mr_lambda(Rational(1, 2), Rational(25, 4));
    EXPECT_EQ(submodule_basis(lk, 1, 6).rank, 14u);
}

TEST(WBasis, FamilyCannotExceedVermaDimension)
{
    // Level 2M+1+q of M(-2M) has dimension 2M+2+q, below 2(q+1) once q > 2M.
    EXPECT_THROW(submodule_basis(VermaKind::mr(-2), 1, 3), ConsistencyError);
}

TEST(Generated, ClosedUnderRaisingAndContainsGenerators)
{
    const auto kind = VermaKind::mr(-2);
    const GeneratedSubmodule w = singular_submodule(kind, {1}, 7);
    EXPECT_EQ(w.dim(2), 0u);
    EXPECT_EQ(w.dim(3), 2u);
    EXPECT_EQ(w.dim(4), 4u);
    EXPECT_TRUE(w.contains(closed_form(kind, Chi::chi01, 1)));
    EXPECT_TRUE(w.contains(closed_form(kind, Chi::chi11, 1)));
    for (int n = 3; n + 2 <= 7; ++n)
        for (const auto& v : w.basis(n))
            for (G g : all_generators)
                EXPECT_TRUE(w.contains(act(g, v))) << name(g) << " level " << n;
}

TEST(Chi11, MZero)
{
    const auto m = chi11_membership(0);
    ASSERT_EQ(m.c.size(), 1u);
    EXPECT_EQ(m.c[0], Rational(1, 2));
    EXPECT_TRUE(m.residual.is_zero());
}

TEST(Chi11, MFourMatrixFirstRow)
{
    const auto m = chi11_membership(4);
    ASSERT_EQ(m.A.rows(), 5u);
    EXPECT_EQ(m.A.row(0), (Vector{Rational(2), 0, 0, 0, 0}));
    EXPECT_NE(m.determinant, 0);
}

TEST(Chi11, MFiveMatrixLastRow)
{
    const auto m = chi11_membership(5);
    ASSERT_EQ(m.A.rows(), 6u);
    EXPECT_EQ(m.A.row(5), (Vector{0, 0, 0, 0, 0, Rational(64)}));
    EXPECT_TRUE(m.residual.is_zero());
}

TEST(Quotient, MrMinusTwo)
{
    const auto t = quotient_dims(VermaKind::mr(-2), 8);
    EXPECT_EQ(quotient_column(t), (std::vector<std::size_t>{1, 2, 3, 2, 1, 0}));
    EXPECT_EQ(t.total, 9u);
}

TEST(Quotient, IrreducibleVerma)
{
    const auto t = quotient_dims(VermaKind::mr(Rational(1, 3)), 6);
    for (const auto& row : t.per_level)
        EXPECT_EQ(row.quotient_dim, static_cast<std::size_t>(row.level + 1));
    EXPECT_FALSE(t.total.has_value());
}

TEST(Quotient, MrLambdaMZero)
{
    const auto t = quotient_dims(VermaKind::mr_lambda(1, 1), 6);
    for (const auto& row : t.per_level)
        EXPECT_EQ(row.quotient_dim, 2u);
    EXPECT_FALSE(t.total.has_value());
}

TEST(Quotient, RootBeyondCapIsAnError)
{
    EXPECT_THROW(quotient_dims(VermaKind::mr(-100), 4, 32), std::invalid_argument);
}

TEST(Classify, Cases)
{
    const auto ii = classify_module(VermaKind::mr(-4), 4);
    EXPECT_EQ(ii.theorem_case, TheoremCase::ii);
    EXPECT_EQ(ii.Ms, (std::vector<int>{2}));
    EXPECT_EQ(ii.table.total, 25u);
    EXPECT_TRUE(ii.singular_vectors_verified);
    EXPECT_TRUE(ii.quotient_irreducible());

    const auto i = classify_module(VermaKind::mr(Rational(7, 2)), 6);
    EXPECT_EQ(i.theorem_case, TheoremCase::i);
    EXPECT_FALSE(i.finite());

    const auto iv = classify_module(VermaKind::mr_lambda(0, 16), 10);
    EXPECT_EQ(iv.theorem_case, TheoremCase::iv);
    EXPECT_EQ(iv.Ms, (std::vector<int>{2}));
    EXPECT_FALSE(iv.finite());
    for (const auto& row : iv.table.per_level)
        if (row.level >= 5)
            EXPECT_EQ(row.quotient_dim, 10u);
    EXPECT_TRUE(iv.quotient_irreducible());

    EXPECT_EQ(classify_module(VermaKind::mr_lambda(Rational(1, 3), 5), 6).theorem_case, TheoremCase::iii);
}

TEST(Classify, DoubleRootGivesFiniteQuotient)
{
    // (r+2M)^2 = lambda at M = 0 and M = 2
    const auto v = classify_module(VermaKind::mr_lambda(-2, 4), 8);
    EXPECT_EQ(v.Ms, (std::vector<int>{0, 2}));
    EXPECT_EQ(quotient_column(v.table), (std::vector<std::size_t>{2, 2, 2, 2, 2, 0}));
    EXPECT_EQ(v.table.total, 10u);
}
