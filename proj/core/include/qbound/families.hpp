#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbound/function.hpp"
#include "qbound/measures.hpp"
#include "qbound/rational.hpp"

namespace qbound::gen {

using ratlp::Rational;

/// splitmix64; the exact stepping is documented in docs/formats.md so that
/// generated corpora are reproducible from seeds alone.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// next() reduced mod bound (bound > 0).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// "Greater than half": S = weight-1 words of length n (n even),
/// f = 1 iff the unique 1 sits at a position > n/2. Throws OddArity.
PartialFunction gth(int n);

/// "Ordered search parity": S = { 0^i 1^(n-i) : 0 <= i <= n } (n even),
/// f = i mod 2. Throws OddArity.
PartialFunction osp(int n);

/// Index of the last 0 (1-based; 0 for the all-ones word) of an osp word.
int osp_index(const Word& x);

struct ProjectivePlane {
    int order = 0;                        // t
    int num_points = 0;                   // t^2 + t + 1
    std::vector<std::vector<int>> lines;  // point indices (0-based), sorted
};

/// PG(2, t) for prime t in [2, 13], built over the integers mod t.
/// Points and lines are indexed by the lexicographically least normalized
/// homogeneous coordinates, so tables are byte-stable. Throws NotPrime,
/// OrderTooLarge.
ProjectivePlane projective_plane(int t);

/// Finite projective plane function: arity t^2+t+1; 0^arity maps to 0 and
/// each line's indicator word maps to 1.
PartialFunction fpp(int t);

/// OR composition: arity n*k over domain S^k, output = OR of the copies.
/// Requires Boolean output; |S|^k must stay within domain_budget.
PartialFunction compose_or(const PartialFunction& f, int k,
                           std::size_t domain_budget = 20000);

/// Total OR on n bits.
PartialFunction total_or(int n);

/// Pseudo-random partial function: the domain is a splitmix64-driven sample
/// of max(2, round(fraction * g^n)) words, outputs uniform in H, resampled
/// until non-constant. Deterministic for a fixed seed. space_budget caps g^n.
PartialFunction random_partial(int n, int g, int h, const Rational& fraction,
                               std::uint64_t seed, std::uint64_t space_budget = 1000000);

/// Streams all non-constant total functions G^n -> H in lexicographic order
/// of their output tables. Construction throws BudgetExceeded when h^(g^n)
/// exceeds the budget.
class TotalFunctionStream {
public:
    TotalFunctionStream(int n, int g, int h, std::uint64_t budget = 1000000);

    std::optional<PartialFunction> next();
    std::uint64_t count() const { return count_; }  // total non-constant functions

private:
    int n_, g_, h_;
    std::vector<Word> words_;
    std::vector<Symbol> outputs_;
    bool exhausted_ = false;
    std::uint64_t count_;
};

/// One deterministically sampled corpus entry: parameters are derived from
/// splitmix64(seed xor index); n in [2, max_n], g in [2, max_g], h in
/// [2, max_h], fraction in {1/4, 2/4, 3/4, 1}.
struct CorpusEntry {
    std::string id;
    PartialFunction function;
};
std::vector<CorpusEntry> random_corpus(int count, int max_n, int max_g, int max_h,
                                       std::uint64_t seed,
                                       std::optional<Rational> fraction = std::nullopt);

// Witnesses the paper uses in its lower-bound arguments.

/// R(x,y) = 1 on every pair with f(x) != f(y).
measures::RelationalWitness all_ones_relational(const PartialFunction& f);

/// Uniform weights over f^-1(A) and f^-1(B) for the partition (A, B) of a
/// Boolean output alphabet given by side_a.
measures::Rank1Witness uniform_rank1(const PartialFunction& f, int side_a = 0);

/// D(x,y) = Ind(x) - Ind(y) on osp pairs with f(x) != f(y), Ind(x) > Ind(y).
measures::DistanceScheme osp_distance_scheme(const PartialFunction& osp_fn);

}  // namespace qbound::gen
