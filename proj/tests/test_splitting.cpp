#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stunted/splitting.hpp"

using namespace stunted;

TEST_CASE("beta constants") {
    auto b = beta_constants(2, 1);
    CHECK(b.beta == 1);
    CHECK(b.beta_hat == 2);
    b = beta_constants(3, 1);
    CHECK(b.beta == 4);
    CHECK(b.beta_hat == 6);
    b = beta_constants(2, 2);
    CHECK(b.beta == 3);
    CHECK(b.beta_hat == 4);
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 3}, {3, 2}, {5, 1}, {7, 2}}) {
        b = beta_constants(p, k);
        CHECK(b.beta_hat % p == 0);
        CHECK(b.beta < b.beta_hat);
        CHECK(b.beta_hat <= b.beta + p);
    }
    CHECK_THROWS_AS(beta_constants(6, 1), std::invalid_argument);
}

TEST_CASE("decompose at (2,1), c=0, top=8") {
    auto rep = decompose_stunted(PkParams(2, 1), 0, 8);
    CHECK(rep.jordan.blocks == std::vector<int>{1, 2, 2, 2, 2});
    CHECK(rep.finite_socle_degrees == std::vector<long long>{0});
    CHECK(rep.finite_block_sizes == std::vector<int>{1});
    // Chains {2,1}, {4,3}, {6,5}, {8,7}; none is cut by the truncation since
    // b_9 would map to 0 anyway.
    CHECK(rep.free_generator_degrees == std::vector<long long>{4, 8, 12, 16});
    CHECK(rep.free_socle_degrees == std::vector<long long>{2, 6, 10, 14});
    CHECK(rep.boundary_block_sizes.empty());
}

TEST_CASE("decompose at (3,1), c=0, top=12") {
    auto rep = decompose_stunted(PkParams(3, 1), 0, 12);
    CHECK(rep.jordan.blocks == std::vector<int>{1, 1, 2, 3, 3, 3});
    // Finite part: b_0 alone and the chain b_3 -> b_1.
    CHECK(rep.finite_socle_degrees == std::vector<long long>{0, 2});
    CHECK(rep.finite_block_sizes == std::vector<int>{1, 2});
    // Free blocks generated by b_6, b_9, b_12.
    CHECK(rep.free_generator_degrees == std::vector<long long>{12, 18, 24});
    // b_11 would be hit by b_13 in the untruncated module: boundary.
    CHECK(rep.boundary_block_sizes == std::vector<int>{1});
}

TEST_CASE("decompose with a single cell") {
    auto rep = decompose_stunted(PkParams(2, 1), 0, 0);
    CHECK(rep.jordan.blocks == std::vector<int>{1});
    CHECK(rep.boundary_block_sizes.empty());
    CHECK(rep.finite_socle_degrees == std::vector<long long>{0});
}

TEST_CASE("decompose rejects top below bottom") {
    CHECK_THROWS_AS(decompose_stunted(PkParams(2, 1), 5, 4), std::invalid_argument);
}

TEST_CASE("dimension count across a grid") {
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {2, 2}, {3, 1}, {5, 1}})
        for (long long c : {-7LL, -3LL, 0LL, 2LL, 5LL}) {
            PkParams params(p, k);
            long long top = c + 50;
            auto rep = decompose_stunted(params, c, top);
            long long total = rep.free_rank() * p;
            for (int b : rep.finite_block_sizes)
                total += b;
            for (int b : rep.boundary_block_sizes)
                total += b;
            CHECK(total == top - c + 1);
            CHECK(rep.jordan.dimension() == top - c + 1);
        }
}

TEST_CASE("stable-zone reports shift by p*t") {
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}}) {
        PkParams params(p, k);
        long long t = 2;
        auto a = decompose_stunted(params, 0, 30);
        auto b = decompose_stunted(params, p * t, 30 + p * t);
        CHECK(a.jordan.blocks == b.jordan.blocks);
        auto shift = [&](std::vector<long long> v) {
            for (auto& d : v)
                d += 2 * p * t;
            return v;
        };
        CHECK(shift(a.free_generator_degrees) == b.free_generator_degrees);
        CHECK(shift(a.free_socle_degrees) == b.free_socle_degrees);
        CHECK(shift(a.finite_socle_degrees) == b.finite_socle_degrees);
        CHECK(a.boundary_block_sizes == b.boundary_block_sizes);
    }
}

TEST_CASE("verify_free_generators on the documented windows") {
    CHECK(verify_free_generators(PkParams(2, 1), 0, 20));
    CHECK(verify_free_generators(PkParams(3, 1), 0, 30));
    CHECK(verify_free_generators(PkParams(3, 1), 6, 30));
    CHECK(verify_free_generators(PkParams(2, 2), -2, 40));
}

TEST_CASE("predicted generators below the margin match the free rank (c >= 0)") {
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}})
        for (long long c : {0LL, static_cast<long long>(p), 2LL * p}) {
            PkParams params(p, k);
            auto consts = beta_constants(p, k);
            long long top = c + 40;
            auto rep = decompose_stunted(params, c, top);
            long long below_margin = 0;
            for (const auto& blk : rep.blocks)
                if (!blk.boundary && blk.size() == static_cast<int>(p) &&
                    blk.generator_index() <= top - consts.beta)
                    ++below_margin;
            long long predicted = 0;
            const long long beta = consts.beta;
            for (long long m = c; m <= top - beta; ++m)
                if (m % p == 0 && m > beta - c && m - beta >= c)
                    ++predicted;
            CHECK(predicted == below_margin);
        }
}

TEST_CASE("finite part support") {
    auto fs = finite_part_support(PkParams(2, 1), 0, 40);
    CHECK(fs.max_degree == 0);
    CHECK(fs.skeleton_degree == 2);
    CHECK(fs.skeleton_degree_alt == 4);
    CHECK(fs.within_skeleton);

    fs = finite_part_support(PkParams(3, 1), 0, 40);
    CHECK(fs.max_degree == 6);  // generator b_3
    CHECK(fs.skeleton_degree == 10);
    CHECK(fs.within_skeleton);

    fs = finite_part_support(PkParams(2, 2), 0, 60);
    CHECK(fs.max_degree == 4);  // finite blocks {b_0} and {b_2}
    CHECK(fs.skeleton_degree == 6);
    CHECK(fs.within_skeleton);
    CHECK(fs.within_skeleton_alt);

    CHECK_THROWS_AS(finite_part_support(PkParams(3, 1), 1, 40), std::invalid_argument);
    CHECK(finite_part_support(PkParams(3, 1), -3, 40).within_skeleton);
}

TEST_CASE("Thom shift linearity holds exactly when p divides c") {
    CHECK(thom_shift_linearity(PkParams(3, 1), 3, 30));
    CHECK_FALSE(thom_shift_linearity(PkParams(3, 1), 1, 30));
    CHECK_FALSE(thom_shift_linearity(PkParams(3, 1), 2, 30));
    CHECK(thom_shift_linearity(PkParams(2, 1), 2, 30));
    CHECK_FALSE(thom_shift_linearity(PkParams(2, 1), 1, 30));
    CHECK(thom_shift_linearity(PkParams(2, 2), -2, 30));
    CHECK(thom_shift_linearity(PkParams(3, 1), -3, 30));

    // Periodicity in c with period p.
    for (long long c = -4; c <= 4; ++c)
        CHECK(thom_shift_linearity(PkParams(3, 1), c, 30) ==
              thom_shift_linearity(PkParams(3, 1), c + 3, 30));
}

TEST_CASE("tate transition surjectivity") {
    CHECK(tate_transition_surjective(PkParams(2, 1), -2, 40));
    CHECK(tate_transition_surjective(PkParams(3, 1), -6, 60));
    CHECK(tate_transition_surjective(PkParams(2, 2), -4, 60));
    CHECK_THROWS_AS(tate_transition_surjective(PkParams(2, 1), 50, 40),
                    std::invalid_argument);
}

TEST_CASE("ko pattern") {
    CHECK(ko_pattern(8) == std::vector<long long>{2, 6, 10, 14});
    // top = 20: all ten chains {2j, 2j-1} are uncut, so the full list appears.
    CHECK(ko_pattern(20) ==
          std::vector<long long>{2, 6, 10, 14, 18, 22, 26, 30, 34, 38});
    CHECK(ko_pattern(2) == std::vector<long long>{2});
    CHECK_THROWS_AS(ko_pattern(1), std::invalid_argument);
}

TEST_CASE("jordan type is insensitive to scaling the operator by a unit") {
    PkParams params(3, 1);
    auto rep = decompose_stunted(params, 0, 24);
    auto op = pk_homology_operator(params, StuntedBasis(0, 24));
    PrimeField f(3);
    FpMatrix scaled = op.matrix();
    for (std::size_t i = 0; i < scaled.rows(); ++i)
        for (std::size_t j = 0; j < scaled.cols(); ++j)
            scaled(i, j) = f.mul(2, scaled(i, j));
    CHECK(jordan_type(scaled, 3) == rep.jordan);
}
