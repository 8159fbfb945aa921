#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "qbound/function.hpp"
#include "qbound/lp.hpp"

namespace qbound::measures {

using ratlp::Rational;

/// Feasible solution of the fractional block sensitivity program at `base`.
struct BlockWeighting {
    Word base;
    std::vector<std::pair<Block, Rational>> weights;
};

/// Per-input weight vectors v_x : [n] -> Q>=0 (fractional certificates,
/// minimax weights).
struct IndexWeighting {
    std::map<Word, std::vector<Rational>> per_input;
};

/// Per-input probability vectors over positions.
struct DistributionFamily {
    std::map<Word, std::vector<Rational>> per_input;
};

/// Symmetric nonnegative pair weights, zero (absent) on equal outputs.
/// Keys are stored with the lexicographically smaller word first.
struct RelationalWitness {
    std::map<std::pair<Word, Word>, Rational> pairs;

    void set(const Word& x, const Word& y, Rational r);
    Rational get(const Word& x, const Word& y) const;
};

/// Pair weights w plus directed triple weights w'(x,y,i) with
/// w'(x,y,i), w'(y,x,i) >= w(x,y) on differing positions.
struct WeightScheme {
    std::map<std::pair<Word, Word>, Rational> pairs;          // symmetric, small-first key
    std::map<std::tuple<Word, Word, int>, Rational> triples;  // directed, 0-based index

    void set_pair(const Word& x, const Word& y, Rational w);
    void set_triple(const Word& x, const Word& y, int i, Rational w);
};

/// Output partition (A, B) with weight vectors over X = f^-1(A), Y = f^-1(B).
/// Weights need not be normalized; evaluation normalizes.
struct Rank1Witness {
    std::vector<int> outputs_a;
    std::vector<int> outputs_b;
    std::map<Word, Rational> p;  // support in X
    std::map<Word, Rational> q;  // support in Y
};

/// Positive integer distances on ordered pairs with f(x) != f(y).
struct DistanceScheme {
    std::map<std::pair<Word, Word>, long long> pairs;
};

struct WordValue {
    Rational value;
    Word argmax;  // lexicographically first maximizer
};

// ---- exact measures ----

/// Maximum number of pairwise disjoint sensitive blocks at x.
int bs_at(const PartialFunction& f, const Word& x);
WordValue bs(const PartialFunction& f);

/// Size of the smallest index set I such that every z in S agreeing with x
/// on I satisfies f(z) = f(x); equivalently a minimum hitting set of the
/// sensitive blocks of x.
int cert_at(const PartialFunction& f, const Word& x);
WordValue cert(const PartialFunction& f);

struct FbsAt {
    Rational value;
    BlockWeighting weighting;
};

/// Optimum of: maximize sum w(B) s.t. for all i, sum over blocks containing
/// i of w(B) <= 1, w >= 0 (w <= 1 is implied since blocks are non-empty).
FbsAt fbs_at(const PartialFunction& f, const Word& x);
WordValue fbs(const PartialFunction& f);

/// fbs with the extra budget constraint sum |B| w(B) <= budget, 0 <= budget <= n.
Rational fbs_parametrized(const PartialFunction& f, const Word& x, const Rational& budget);

struct FcAt {
    Rational value;
    std::vector<Rational> weights;  // length n
};

/// Optimum of: minimize sum_i v(i) s.t. for every sensitive block B of x,
/// sum over i in B of v(i) >= 1, v >= 0. Equals fbs_at by LP duality.
FcAt fc_at(const PartialFunction& f, const Word& x);

struct FcResult {
    Rational value;
    Word argmax;
    IndexWeighting family;  // optimal v_x for every x in S
};
FcResult fc(const PartialFunction& f);

struct MmResult {
    Rational value;
    IndexWeighting weights;            // optimal v_x
    DistributionFamily distributions;  // v_x normalized per input
};

/// Minimax over distributions, computed as the linear program
///   minimize t  s.t.  sum_i v_x(i) <= t for all x,
///                     sum_{i : x_i != y_i} m_xyi >= 1 for all f(x) != f(y),
///                     m_xyi <= v_x(i), m_xyi <= v_y(i), all variables >= 0,
/// which linearizes the min-sum constraints exactly.
MmResult mm(const PartialFunction& f);

struct Ca1Result {
    Rational value;
    Rank1Witness witness;  // optimal weights on the best output partition
};

/// Rank-1 relational adversary bound for Boolean input alphabets: the best,
/// over output partitions (A, B), optimum of the balanced-weight program
/// whose (i, b) constraints are two-way disjunctions. Throws
/// NonBooleanAlphabet when g != 2.
Ca1Result ca1(const PartialFunction& f);

enum class MeasureKind { Bs, Cert, Fbs, Fc };

/// Max of the per-input measure over f^-1(side); requires Boolean output.
WordValue one_sided(const PartialFunction& f, MeasureKind kind, int side);

// ---- witness evaluation ----

/// min over {x, y, i : R(x,y) > 0, x_i != y_i} of max{theta(x,i), theta(y,i)}
/// with theta(x,i) = sum_y R(x,y) / sum_{y : x_i != y_i} R(x,y).
/// A lower bound on CA(f).
Rational eval_relational(const PartialFunction& f, const RelationalWitness& witness);

/// min over {x, y, i : w(x,y) > 0, x_i != y_i} of max{wt(x)/v(x,i), wt(y)/v(y,i)}.
/// A lower bound on WA(f) = CA(f).
Rational eval_weighted(const PartialFunction& f, const WeightScheme& scheme);

struct MmEval {
    bool infinite = false;  // some pair has zero overlap
    Rational value;
};

/// max over pairs f(x) != f(y) of 1 / sum_{i : x_i != y_i} min{p_x(i), p_y(i)};
/// an upper bound on MM(f).
MmEval eval_mm_witness(const PartialFunction& f, const DistributionFamily& family);

/// Rank-1 adversary value of the witness; a lower bound on CA1(f).
/// Uses the (i, b) form for Boolean inputs and the guarded (i, g1, g2) form
/// otherwise.
Rational eval_rank1(const PartialFunction& f, const Rank1Witness& witness);

struct DistanceEval {
    Rational total_weight;  // W = sum 1/D(x,y)
    Rational bound;         // (W/|S|) * min max{1/RL, 1/LL}, no Omega constant
};

DistanceEval eval_distance_scheme(const PartialFunction& f, const DistanceScheme& scheme);

}  // namespace qbound::measures
