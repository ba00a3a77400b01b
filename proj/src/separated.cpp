#include "extset/separated.hpp"

#include <stdexcept>

namespace extset {

BlockStructure::BlockStructure(int n, int k) : block_size(n), block_count(k) {
  if (n < 1 || k < 1) throw std::invalid_argument("block structure needs n >= 1, k >= 1");
  check_ground_size(n * k);
}

SetMask BlockStructure::block_mask(int i) const {
  if (i < 1 || i > block_count) throw std::invalid_argument("block index out of range");
  return full_mask(block_size) << ((i - 1) * block_size);
}

int BlockStructure::minimum(int i) const {
  if (i < 1 || i > block_count) throw std::invalid_argument("block index out of range");
  return (i - 1) * block_size + 1;
}

std::vector<ShiftPair> block_shift_pairs(const BlockStructure& bs) {
  std::vector<ShiftPair> ps;
  for (int b = 1; b <= bs.block_count; ++b) {
    const int lo = bs.minimum(b);
    for (int i = lo; i < lo + bs.block_size; ++i)
      for (int j = i + 1; j < lo + bs.block_size; ++j) ps.push_back({i, j});
  }
  return ps;
}

SeparatedParams::SeparatedParams(int n, int k, int l, int lp, int t)
    : n(n), k(k), l(l), lp(lp), t(t) {
  if (n < 1) throw std::invalid_argument("separated params: n must be >= 1");
  if (!(k >= l && l >= lp && lp >= t && t >= 1))
    throw std::invalid_argument("separated params require k >= l >= lp >= t >= 1");
  check_ground_size(n * k);
}

namespace {

constexpr std::size_t kUniverseCap = std::size_t{1} << 22;

void enumerate_H_rec(const BlockStructure& bs, int block, int remaining, SetMask acc,
                     std::vector<SetMask>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  if (bs.block_count - block + 1 < remaining) return;
  enumerate_H_rec(bs, block + 1, remaining, acc, out);
  const int lo = bs.minimum(block);
  for (int e = lo; e < lo + bs.block_size; ++e)
    enumerate_H_rec(bs, block + 1, remaining - 1, acc | element_mask(e), out);
}

}  // namespace

Family enumerate_H(const BlockStructure& bs, int l) {
  if (l < 1 || l > bs.block_count)
    throw std::invalid_argument("enumerate_H: need 1 <= l <= k, got l=" + std::to_string(l));
  const BigInt count = binomial(bs.block_count, l) * int_pow(bs.block_size, l);
  if (count > kUniverseCap)
    throw std::invalid_argument("enumerate_H: universe of size " + count.str() + " exceeds cap");
  std::vector<SetMask> out;
  out.reserve(static_cast<std::size_t>(count));
  enumerate_H_rec(bs, 1, l, 0, out);
  return Family(bs.ground_size(), std::move(out));
}

SetMask a_profile(SetMask h, const BlockStructure& bs) {
  if (h & ~full_mask(bs.ground_size()))
    throw std::invalid_argument("a_profile: set has elements outside the ground set");
  SetMask profile = 0;
  for (int i = 1; i <= bs.block_count; ++i) {
    const SetMask within = h & bs.block_mask(i);
    if (mask_card(within) > 1)
      throw std::invalid_argument("a_profile: set meets block " + std::to_string(i) + " twice");
    if (within == element_mask(bs.minimum(i))) profile |= element_mask(i);
  }
  return profile;
}

Family a_family(const Family& f, const BlockStructure& bs) {
  if (f.ground_size() != bs.ground_size())
    throw std::invalid_argument("a_family: family ground size does not match the block structure");
  std::vector<SetMask> out;
  out.reserve(f.size());
  for (SetMask m : f.members()) out.push_back(a_profile(m, bs));
  return Family(bs.block_count, std::move(out));
}

Family build_candidate(const SeparatedParams& p, Candidate which, int a) {
  const BlockStructure bs = p.blocks();
  SetMask v_lp = 0;
  for (int i = 1; i <= p.lp; ++i) v_lp |= element_mask(bs.minimum(i));

  switch (which) {
    case Candidate::F0: {
      const Family h = enumerate_H(bs, p.l);
      std::vector<SetMask> out;
      for (SetMask m : h.members())
        if (mask_card(m & v_lp) >= p.t) out.push_back(m);
      return Family(bs.ground_size(), std::move(out));
    }
    case Candidate::G0:
      return Family(bs.ground_size(), {v_lp});
    case Candidate::Fa: {
      if (a < 1 || a > p.l)
        throw std::invalid_argument("build_candidate: Fa needs a in [1,l]");
      SetMask v_a = 0;
      for (int i = 1; i <= a; ++i) v_a |= element_mask(bs.minimum(i));
      const Family h = enumerate_H(bs, p.l);
      std::vector<SetMask> out;
      for (SetMask m : h.members())
        if ((m & v_a) == v_a) out.push_back(m);
      return Family(bs.ground_size(), std::move(out));
    }
    case Candidate::Ga: {
      if (a < 1 || a > p.k)
        throw std::invalid_argument("build_candidate: Ga needs a in [1,k]");
      SetMask v_a = 0;
      for (int i = 1; i <= a; ++i) v_a |= element_mask(bs.minimum(i));
      const Family h = enumerate_H(bs, p.lp);
      std::vector<SetMask> out;
      for (SetMask m : h.members())
        if (mask_card(m & v_a) >= p.t) out.push_back(m);
      return Family(bs.ground_size(), std::move(out));
    }
  }
  throw std::logic_error("build_candidate: unreachable");
}

namespace {

void check_ks_params(int k, int a, int l, int t) {
  check_ground_size(k);
  if (k > 22) throw std::invalid_argument("build_K/S: k too large to enumerate");
  if (a < 1 || a > k) throw std::invalid_argument("build_K/S: need 1 <= a <= k");
  if (l < 0 || l > k) throw std::invalid_argument("build_K/S: need 0 <= l <= k");
  if (t < 0) throw std::invalid_argument("build_K/S: t must be >= 0");
}

}  // namespace

Family build_K(int k, int a, int l, int t) {
  check_ks_params(k, a, l, t);
  if (t > a) throw std::invalid_argument("build_K: need t <= a");
  const SetMask amask = full_mask(a);
  std::vector<SetMask> out;
  for (SetMask m = 0; m <= full_mask(k); ++m)
    if (mask_card(m) <= l && mask_card(m & amask) >= t) out.push_back(m);
  return Family(k, std::move(out));
}

Family build_S(int k, int a, int l) {
  check_ks_params(k, a, l, 0);
  const SetMask amask = full_mask(a);
  std::vector<SetMask> out;
  for (SetMask m = 0; m <= full_mask(k); ++m)
    if (mask_card(m) <= l && (m & amask) == amask) out.push_back(m);
  return Family(k, std::move(out));
}

WeightTable::WeightTable(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("weight table must cover size 0");
  for (const Rational& v : values_)
    if (v < 0) throw std::invalid_argument("weight table values must be nonnegative");
}

WeightTable WeightTable::unit(int max_size) {
  if (max_size < 0) throw std::invalid_argument("unit weight table needs max_size >= 0");
  return WeightTable(std::vector<Rational>(max_size + 1, Rational(1)));
}

const Rational& WeightTable::at(int j) const {
  if (j < 0 || j > max_size())
    throw std::out_of_range("weight table lookup at size " + std::to_string(j));
  return values_[static_cast<std::size_t>(j)];
}

bool WeightTable::non_increasing() const {
  for (std::size_t j = 1; j < values_.size(); ++j)
    if (values_[j] > values_[j - 1]) return false;
  return true;
}

std::pair<WeightTable, WeightTable> weight_tables(const SeparatedParams& p) {
  std::vector<Rational> w1(p.k + 1), w2(p.k + 1);
  for (int j = 0; j <= p.k; ++j) {
    w1[j] = Rational(binomial(p.k - j, p.l - j) * int_pow(p.n - 1, p.l - j));
    w2[j] = Rational(binomial(p.k - j, p.lp - j) * int_pow(p.n - 1, p.lp - j));
  }
  return {WeightTable(std::move(w1)), WeightTable(std::move(w2))};
}

Rational family_weight(const Family& f, const WeightTable& w) {
  Rational total = 0;
  for (SetMask m : f.members()) total += w.at(mask_card(m));
  return total;
}

namespace {

BigInt as_integer(const Rational& q, const char* what) {
  if (denominator(q) != 1) throw std::logic_error(std::string(what) + ": expected an integer value");
  return numerator(q);
}

}  // namespace

T3Report t3_bound(const SeparatedParams& p) {
  if (p.n < 2)
    throw std::invalid_argument("t3_bound rejects n=1: weight tables need not be non-increasing there");
  const auto [w1, w2] = weight_tables(p);

  T3Report report{p, {}, {}, 0, 'f', p.lp, false};
  for (int a = p.t; a <= p.lp; ++a) {
    Rational fa = family_weight(build_K(p.k, a, p.l, p.t), w1) +
                  family_weight(build_S(p.k, a, p.lp), w2);
    report.f_values.push_back(as_integer(fa, "t3_bound f(a)"));
  }
  for (int a = p.t; a <= p.l; ++a) {
    Rational ga = family_weight(build_S(p.k, a, p.l), w1) +
                  family_weight(build_K(p.k, a, p.lp, p.t), w2);
    report.g_values.push_back(as_integer(ga, "t3_bound g(a)"));
  }

  report.bound = report.f_values.back();  // f(lp)
  report.argmax_side = 'f';
  report.argmax_a = p.lp;
  for (int a = p.lp + 1; a <= p.l; ++a) {
    const BigInt& ga = report.g_values[static_cast<std::size_t>(a - p.t)];
    if (ga > report.bound) {
      report.bound = ga;
      report.argmax_side = 'g';
      report.argmax_a = a;
    }
  }

  if (p.n * p.k <= 16) {
    const BigInt f0g0 = BigInt(build_candidate(p, Candidate::F0).size()) +
                        BigInt(build_candidate(p, Candidate::G0).size());
    if (f0g0 != report.f_values.back())
      throw std::logic_error("t3_bound: |F_0|+|G_0| disagrees with f(lp)");
    for (int a = p.lp + 1; a <= p.l; ++a) {
      const BigInt faga = BigInt(build_candidate(p, Candidate::Fa, a).size()) +
                          BigInt(build_candidate(p, Candidate::Ga, a).size());
      if (faga != report.g_values[static_cast<std::size_t>(a - p.t)])
        throw std::logic_error("t3_bound: |F_a|+|G_a| disagrees with g(a) at a=" + std::to_string(a));
    }
    report.identities_checked = true;
  }
  return report;
}

BigInt f23_sum(int n, int k, int l, int lp) {
  if (n < 2) throw std::invalid_argument("f23_sum: n must be >= 2");
  if (!(k >= l && l >= lp && lp >= 2))
    throw std::invalid_argument("f23_sum requires k >= l >= lp >= 2");
  BigInt total = 0;
  for (int j = 1; j <= l; ++j)
    total += (binomial(k, j) - binomial(k - lp, j)) * binomial(k - j, l - j) * int_pow(n - 1, l - j);
  return total + 1;
}

N1Bound n1_candidate_max(int k, int l, int lp, int t, const WeightTable& w1,
                         const WeightTable& w2) {
  if (!(k >= l && l >= lp && lp >= t && t >= 1))
    throw std::invalid_argument("n1_candidate_max requires k >= l >= lp >= t >= 1");
  bool have = false;
  N1Bound best{0, 'f', t};
  for (int a = t; a <= lp; ++a) {
    Rational v = family_weight(build_K(k, a, l, t), w1) + family_weight(build_S(k, a, lp), w2);
    if (!have || v > best.value) {
      best = N1Bound{v, 'f', a};
      have = true;
    }
  }
  for (int a = t; a <= l; ++a) {
    Rational v = family_weight(build_S(k, a, l), w1) + family_weight(build_K(k, a, lp, t), w2);
    if (v > best.value) best = N1Bound{v, 'g', a};
  }
  return best;
}

}  // namespace extset
