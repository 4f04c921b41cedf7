#include "stunted/splitting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stunted {

BetaConstants beta_constants(std::uint32_t p, std::uint32_t k) {
    PkParams params(p, k);  // validates p, k
    BetaConstants b{p, k, 0, 0};
    long long pk = ipow(p, k);
    b.beta = static_cast<long long>(p - 1) * (pk - 1);
    b.beta_hat = pk * static_cast<long long>(p - 1);
    if (b.beta_hat % p != 0 || !(b.beta < b.beta_hat && b.beta_hat <= b.beta + p))
        throw internal_error("beta_constants: beta_hat is not the next multiple of p");
    return b;
}

namespace {

// Coefficient with which the operator leaves b_j.
std::uint32_t leaving_coefficient(const PkParams& params, long long j) {
    return static_cast<std::uint32_t>(mod_ll(j - params.shift(), params.p));
}

std::vector<ChainBlock> chain_blocks(const PkParams& params, long long c, long long top) {
    const long long s = params.shift();
    std::vector<char> visited(static_cast<std::size_t>(top - c + 1), 0);
    std::vector<ChainBlock> blocks;
    // Chains descend, so scanning from the top cell meets each head first.
    for (long long i = top; i >= c; --i) {
        if (visited[static_cast<std::size_t>(i - c)])
            continue;
        ChainBlock blk;
        long long cur = i;
        for (;;) {
            blk.indices.push_back(cur);
            visited[static_cast<std::size_t>(cur - c)] = 1;
            if (leaving_coefficient(params, cur) == 0 || cur - s < c)
                break;
            cur -= s;
        }
        // A block is a truncation artifact exactly when its head would
        // receive a nonzero coefficient from a cell above the window; such
        // heads can only live within beta indices of the top.
        long long head = blk.generator_index();
        blk.boundary = head + s > top && leaving_coefficient(params, head + s) != 0;
        blocks.push_back(std::move(blk));
    }
    return blocks;
}

}  // namespace

SplittingReport decompose_stunted(const PkParams& params, long long c, long long top) {
    if (top < c)
        throw std::invalid_argument("decompose_stunted: top cell below bottom cell");
    if (top - c + 1 > 20000)
        throw std::invalid_argument("decompose_stunted: window too large");
    auto consts = beta_constants(params.p, params.k);

    StuntedBasis basis(c, top);
    NilOperator op = pk_homology_operator(params, basis);

    SplittingReport rep{params,
                        c,
                        top,
                        op.jordan_type(),
                        chain_blocks(params, c, top),
                        {},
                        {},
                        {},
                        {},
                        {},
                        top - consts.beta};

    std::vector<int> sizes;
    for (const auto& blk : rep.blocks) {
        sizes.push_back(blk.size());
        if (blk.boundary) {
            rep.boundary_block_sizes.push_back(blk.size());
        } else if (blk.size() == static_cast<int>(params.p)) {
            rep.free_generator_degrees.push_back(2 * blk.generator_index());
            rep.free_socle_degrees.push_back(2 * blk.socle_index());
        } else {
            rep.finite_socle_degrees.push_back(2 * blk.socle_index());
            rep.finite_block_sizes.push_back(blk.size());
        }
    }
    std::sort(sizes.begin(), sizes.end());
    if (sizes != rep.jordan.blocks)
        throw internal_error(
            "decompose_stunted: chain blocks disagree with the rank-profile Jordan type");

    std::sort(rep.free_generator_degrees.begin(), rep.free_generator_degrees.end());
    std::sort(rep.free_socle_degrees.begin(), rep.free_socle_degrees.end());
    std::sort(rep.finite_socle_degrees.begin(), rep.finite_socle_degrees.end());
    std::sort(rep.boundary_block_sizes.begin(), rep.boundary_block_sizes.end());
    std::sort(rep.finite_block_sizes.begin(), rep.finite_block_sizes.end());

    for (long long d : rep.free_generator_degrees)
        if (std::binary_search(rep.finite_socle_degrees.begin(),
                               rep.finite_socle_degrees.end(), d))
            throw internal_error("decompose_stunted: free and finite degrees overlap");
    for (const auto& blk : rep.blocks)
        for (long long i : blk.indices)
            if (2 * i < 2 * c || 2 * i > 2 * top)
                throw internal_error("decompose_stunted: degree outside the window");
    return rep;
}

bool verify_free_generators(const PkParams& params, long long c, long long top) {
    if (top < c)
        throw std::invalid_argument("verify_free_generators: top cell below bottom cell");
    auto consts = beta_constants(params.p, params.k);
    const long long p = params.p;

    StuntedBasis basis(c, top);
    FpMatrix action = pk_homology_operator(params, basis).matrix();
    const std::size_t dim = basis.dim();

    // Candidate generators b_{pi}: above the predicted threshold pi > beta - c,
    // with the whole chain inside the window (pi - beta >= c) and the
    // generator below the stable margin (pi <= top - beta).
    const long long lo = std::max({consts.beta - c + 1, c + consts.beta, c});
    const long long first = lo >= 0 ? (lo + p - 1) / p * p : -(-lo / p) * p;
    std::vector<long long> candidates;
    for (long long m = first; m <= top - consts.beta; m += p)
        candidates.push_back(m);

    if (candidates.empty())
        return true;

    PrimeField f(params.p);
    FpMatrix images(f, dim, candidates.size());
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        std::vector<std::uint32_t> v(dim, 0);
        v[static_cast<std::size_t>(candidates[idx] - c)] = 1;
        for (std::uint32_t step = 0; step + 1 < params.p; ++step)
            v = action.apply(v);
        bool nonzero = false;
        for (std::size_t r = 0; r < dim; ++r) {
            images(r, idx) = v[r];
            nonzero = nonzero || v[r] != 0;
        }
        if (!nonzero)
            return false;
    }
    return images.rank() == candidates.size();
}

FiniteSupportReport finite_part_support(const PkParams& params, long long c, long long top) {
    if (mod_ll(c, params.p) != 0)
        throw std::invalid_argument(
            "finite_part_support: bottom cell must be divisible by p");
    auto consts = beta_constants(params.p, params.k);
    auto rep = decompose_stunted(params, c, top);

    FiniteSupportReport out{};
    out.finite_part_empty = true;
    out.max_degree = 2 * c - 2;
    for (const auto& blk : rep.blocks) {
        if (blk.boundary || blk.size() == static_cast<int>(params.p))
            continue;
        out.finite_part_empty = false;
        out.max_degree = std::max(out.max_degree, 2 * blk.generator_index());
    }
    out.skeleton_degree = 2 * (c + consts.beta_hat - 1);
    out.skeleton_degree_alt = 2 * (c + consts.beta_hat);
    out.within_skeleton = out.finite_part_empty || out.max_degree <= out.skeleton_degree;
    out.within_skeleton_alt =
        out.finite_part_empty || out.max_degree <= out.skeleton_degree_alt;
    return out;
}

bool thom_shift_linearity(const PkParams& params, long long c, long long top) {
    if (top < 0)
        throw std::invalid_argument("thom_shift_linearity: top must be nonnegative");
    FpMatrix base = pk_homology_operator(params, StuntedBasis(0, top)).matrix();
    FpMatrix shifted = pk_homology_operator(params, StuntedBasis(c, top + c)).matrix();
    return base == shifted;
}

bool tate_transition_surjective(const PkParams& params, long long s, long long top) {
    auto consts = beta_constants(params.p, params.k);
    const long long tgt_bot = s + consts.beta_hat;
    if (top < tgt_bot)
        throw std::invalid_argument("tate_transition_surjective: empty target window");

    auto src = decompose_stunted(params, s, top);
    auto tgt = decompose_stunted(params, tgt_bot, top);

    // Indices of the source's stable free part that survive the collapse.
    std::vector<long long> image_indices;
    for (const auto& blk : src.blocks) {
        if (blk.boundary || blk.size() != static_cast<int>(params.p))
            continue;
        for (long long i : blk.indices)
            if (i >= tgt_bot)
                image_indices.push_back(i);
    }
    std::vector<long long> target_socles;
    for (const auto& blk : tgt.blocks)
        if (!blk.boundary && blk.size() == static_cast<int>(params.p))
            target_socles.push_back(blk.socle_index());

    const std::size_t dim = static_cast<std::size_t>(top - tgt_bot + 1);
    PrimeField f(params.p);
    FpMatrix span(f, dim, image_indices.size());
    for (std::size_t j = 0; j < image_indices.size(); ++j)
        span(static_cast<std::size_t>(image_indices[j] - tgt_bot), j) = 1;
    FpMatrix augmented(f, dim, image_indices.size() + target_socles.size());
    for (std::size_t j = 0; j < image_indices.size(); ++j)
        augmented(static_cast<std::size_t>(image_indices[j] - tgt_bot), j) = 1;
    for (std::size_t j = 0; j < target_socles.size(); ++j)
        augmented(static_cast<std::size_t>(target_socles[j] - tgt_bot),
                  image_indices.size() + j) = 1;
    return span.rank() == augmented.rank();
}

std::vector<long long> ko_pattern(long long top) {
    if (top < 2)
        throw std::invalid_argument("ko_pattern: top must be at least 2");
    return decompose_stunted(PkParams(2, 1), 0, top).free_socle_degrees;
}

}  // namespace stunted
