#include "extset/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>

#include "extset/nip.hpp"
#include "extset/params.hpp"
#include "extset/predicates.hpp"

namespace extset {

Family best_partner(const Family& f, const Family& universe, int t) {
  if (f.ground_size() != universe.ground_size())
    throw std::invalid_argument("best_partner: mismatched ground sizes");
  if (t < 1) throw std::invalid_argument("best_partner: t must be >= 1");
  std::vector<SetMask> out;
  for (SetMask g : universe.members()) {
    bool ok = true;
    for (SetMask m : f.members())
      if (std::popcount(m & g) < t) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return Family(universe.ground_size(), std::move(out));
}

namespace {

using Clock = std::chrono::steady_clock;

struct ScaledWeights {
  std::vector<std::int64_t> iterate;  // per kept iterate member
  std::vector<std::int64_t> partner;  // per partner-universe member
  BigInt scale;
};

std::int64_t to_i64(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error(std::string(what) + ": scaled weights exceed 64-bit range");
  return static_cast<std::int64_t>(v);
}

// Local best candidate of one DFS task.
struct LocalBest {
  bool have = false;
  std::int64_t score = 0;
  std::vector<int> incl;                // iterate-side member indices
  std::vector<std::uint64_t> partner;   // partner-side bitmask
  std::uint64_t scanned = 0;
  bool expired = false;
};

struct PairMaxContext {
  int d = 0;
  int words = 0;
  std::vector<std::vector<std::uint64_t>> rows;  // compat row per kept member
  std::vector<SetMask> imembers;                 // kept iterate members
  std::vector<SetMask> pmembers;                 // partner universe members
  std::vector<std::int64_t> iw;                  // scaled weights
  std::vector<std::int64_t> pw;
  std::vector<std::uint64_t> full;               // all partner bits
  std::int64_t pw_full = 0;
  bool swapped = false;
  Clock::time_point deadline;
};

std::vector<SetMask> decode_partner(const PairMaxContext& ctx, std::span<const std::uint64_t> bits) {
  std::vector<SetMask> out;
  for (int w = 0; w < ctx.words; ++w) {
    std::uint64_t v = bits[static_cast<std::size_t>(w)];
    while (v) {
      out.push_back(ctx.pmembers[static_cast<std::size_t>(w * 64 + std::countr_zero(v))]);
      v &= v - 1;
    }
  }
  return out;
}

std::vector<SetMask> decode_included(const PairMaxContext& ctx, std::span<const int> incl) {
  std::vector<SetMask> out;
  out.reserve(incl.size());
  for (int i : incl) out.push_back(ctx.imembers[static_cast<std::size_t>(i)]);
  return out;
}

bool mask_seq_less(const std::vector<SetMask>& a, const std::vector<SetMask>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), mask_canonical_less);
}

// Orders candidates by (f-side, g-side) in the original orientation.
bool witness_less(const PairMaxContext& ctx, const LocalBest& a, const LocalBest& b) {
  auto fa = ctx.swapped ? decode_partner(ctx, a.partner) : decode_included(ctx, a.incl);
  auto fb = ctx.swapped ? decode_partner(ctx, b.partner) : decode_included(ctx, b.incl);
  if (fa != fb) return mask_seq_less(fa, fb);
  auto ga = ctx.swapped ? decode_included(ctx, a.incl) : decode_partner(ctx, a.partner);
  auto gb = ctx.swapped ? decode_included(ctx, b.incl) : decode_partner(ctx, b.partner);
  return mask_seq_less(ga, gb);
}

struct DfsTask {
  const PairMaxContext* ctx;
  std::vector<std::uint64_t> stack;  // (d+1) levels of partner words
  std::vector<int> incl;
  LocalBest best;

  explicit DfsTask(const PairMaxContext& c) : ctx(&c) {
    stack.resize(static_cast<std::size_t>(c.d + 1) * c.words);
    std::copy(c.full.begin(), c.full.end(), stack.begin());
  }

  void consider(int depth, std::int64_t score) {
    const std::uint64_t* cur = &stack[static_cast<std::size_t>(depth) * ctx->words];
    LocalBest cand;
    cand.have = true;
    cand.score = score;
    cand.incl = incl;
    cand.partner.assign(cur, cur + ctx->words);
    if (!best.have || cand.score > best.score ||
        (cand.score == best.score && witness_less(*ctx, cand, best))) {
      cand.scanned = best.scanned;
      cand.expired = best.expired;
      best = std::move(cand);
    }
  }

  // Applies member m on top of level `depth`; returns the partner weight
  // delta and whether the new partner is non-empty.
  bool apply(int depth, int m, std::int64_t& removed) {
    const std::uint64_t* cur = &stack[static_cast<std::size_t>(depth) * ctx->words];
    std::uint64_t* nxt = &stack[static_cast<std::size_t>(depth + 1) * ctx->words];
    const std::uint64_t* row = ctx->rows[static_cast<std::size_t>(m)].data();
    removed = 0;
    std::uint64_t any = 0;
    for (int w = 0; w < ctx->words; ++w) {
      std::uint64_t rem = cur[w] & ~row[w];
      nxt[w] = cur[w] & row[w];
      any |= nxt[w];
      while (rem) {
        removed += ctx->pw[static_cast<std::size_t>(w * 64 + std::countr_zero(rem))];
        rem &= rem - 1;
      }
    }
    return any != 0;
  }

  void extend(int start, int depth, std::int64_t fw, std::int64_t pw) {
    for (int m = start; m < ctx->d; ++m) {
      if ((++best.scanned & 0xffff) == 0 && Clock::now() > ctx->deadline) {
        best.expired = true;
        return;
      }
      std::int64_t removed = 0;
      if (!apply(depth, m, removed)) continue;  // all extensions infeasible too
      const std::int64_t nfw = fw + ctx->iw[static_cast<std::size_t>(m)];
      const std::int64_t npw = pw - removed;
      incl.push_back(m);
      consider(depth + 1, nfw + npw);
      extend(m + 1, depth + 1, nfw, npw);
      incl.pop_back();
      if (best.expired) return;
    }
  }

  // Runs all subsets whose intersection with the first `pb` members equals
  // `assignment`; evaluates the prefix itself exactly once.
  void run(std::uint64_t assignment, int pb) {
    int depth = 0;
    std::int64_t fw = 0, pw = ctx->pw_full;
    for (int m = 0; m < pb; ++m) {
      if (!((assignment >> m) & 1)) continue;
      std::int64_t removed = 0;
      if (!apply(depth, m, removed)) return;  // this prefix pattern is infeasible
      // Compact the stack: reuse level depth+1 as the new current level.
      ++depth;
      fw += ctx->iw[static_cast<std::size_t>(m)];
      pw -= removed;
      incl.push_back(m);
    }
    if (!incl.empty()) consider(depth, fw + pw);
    extend(pb, depth, fw, pw);
  }
};

}  // namespace

PairMaxReport exhaustive_pair_max(const Family& universe_f, const Family& universe_g, int t,
                                  const WeightTable& wf, const WeightTable& wg,
                                  const SearchBudget& budget) {
  if (universe_f.ground_size() != universe_g.ground_size())
    throw std::invalid_argument("exhaustive_pair_max: mismatched ground sizes");
  if (t < 1) throw std::invalid_argument("exhaustive_pair_max: t must be >= 1");

  PairMaxContext ctx;
  ctx.swapped = universe_g.size() < universe_f.size();
  const Family& UI = ctx.swapped ? universe_g : universe_f;
  const Family& UP = ctx.swapped ? universe_f : universe_g;
  const WeightTable& WI = ctx.swapped ? wg : wf;
  const WeightTable& WP = ctx.swapped ? wf : wg;

  // Common denominator so all weights become 64-bit integers.
  BigInt scale = 1;
  for (SetMask m : UI.members()) scale = lcm(scale, denominator(WI.at(mask_card(m))));
  for (SetMask m : UP.members()) scale = lcm(scale, denominator(WP.at(mask_card(m))));
  BigInt total = 0;
  auto scaled = [&](const Rational& q) { return numerator(q) * (scale / denominator(q)); };
  for (SetMask m : UI.members()) total += scaled(WI.at(mask_card(m)));
  for (SetMask m : UP.members()) total += scaled(WP.at(mask_card(m)));
  if (total > (BigInt(1) << 62))
    throw std::overflow_error("exhaustive_pair_max: weights too large for the integer fast path");

  const int pcount = static_cast<int>(UP.size());
  ctx.words = std::max(1, (pcount + 63) / 64);
  ctx.pmembers = UP.members();
  ctx.pw.reserve(ctx.pmembers.size());
  for (SetMask m : ctx.pmembers) ctx.pw.push_back(to_i64(scaled(WP.at(mask_card(m))), "partner weight"));
  ctx.full.assign(static_cast<std::size_t>(ctx.words), 0);
  for (int b = 0; b < pcount; ++b) ctx.full[static_cast<std::size_t>(b / 64)] |= std::uint64_t{1} << (b % 64);
  for (std::int64_t w : ctx.pw) ctx.pw_full += w;

  PairMaxReport report;
  report.swapped_roles = ctx.swapped;

  // Compatibility rows; members whose row is empty cannot sit in a feasible f.
  for (SetMask m : UI.members()) {
    std::vector<std::uint64_t> row(static_cast<std::size_t>(ctx.words), 0);
    bool any = false;
    for (int b = 0; b < pcount; ++b)
      if (std::popcount(m & ctx.pmembers[static_cast<std::size_t>(b)]) >= t) {
        row[static_cast<std::size_t>(b / 64)] |= std::uint64_t{1} << (b % 64);
        any = true;
      }
    if (!any) continue;
    ctx.imembers.push_back(m);
    ctx.rows.push_back(std::move(row));
    ctx.iw.push_back(to_i64(scaled(WI.at(mask_card(m))), "iterate weight"));
  }
  ctx.d = static_cast<int>(ctx.imembers.size());
  if (ctx.d > budget.max_universe_bits) {
    ctx.d = budget.max_universe_bits;
    report.exhaustive = false;
  }
  ctx.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(budget.time_cap_seconds));

  int pb = 0;
  while ((1 << pb) < budget.parallel_chunks && pb < ctx.d && pb < 12) ++pb;
  const std::uint64_t ntasks = std::uint64_t{1} << pb;

  std::vector<LocalBest> locals(ntasks);
  if (ntasks == 1) {
    DfsTask task(ctx);
    task.run(0, 0);
    locals[0] = std::move(task.best);
  } else {
    std::vector<std::future<LocalBest>> futures;
    futures.reserve(ntasks);
    for (std::uint64_t a = 0; a < ntasks; ++a)
      futures.push_back(std::async(std::launch::async, [&ctx, a, pb]() {
        DfsTask task(ctx);
        task.run(a, pb);
        return std::move(task.best);
      }));
    for (std::uint64_t a = 0; a < ntasks; ++a) locals[a] = futures[a].get();
  }

  LocalBest best;
  for (auto& lb : locals) {
    report.subsets_scanned += lb.scanned;
    if (lb.expired) report.exhaustive = false;
    if (!lb.have) continue;
    if (!best.have || lb.score > best.score ||
        (lb.score == best.score && witness_less(ctx, lb, best)))
      best = std::move(lb);
  }

  if (best.have) {
    report.feasible = true;
    report.optimum = Rational(BigInt(best.score), scale);
    auto iside = decode_included(ctx, best.incl);
    auto pside = decode_partner(ctx, best.partner);
    const int n = universe_f.ground_size();
    report.witness_f = Family(n, ctx.swapped ? pside : iside);
    report.witness_g = Family(n, ctx.swapped ? iside : pside);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Maximal IU-families via clique enumeration.

namespace {

struct CliqueContext {
  int v_count = 0;
  std::vector<std::uint64_t> adj;
  std::vector<SetMask> vertex;  // vertex id -> member mask
  Clock::time_point deadline;
  bool expired = false;
  std::uint64_t emitted = 0;
  std::function<void(std::uint64_t)> emit;
};

void bron_kerbosch(CliqueContext& ctx, std::uint64_t r, std::uint64_t p, std::uint64_t x) {
  if (ctx.expired) return;
  if (!p && !x) {
    ctx.emit(r);
    if ((++ctx.emitted & 0xfff) == 0 && Clock::now() > ctx.deadline) ctx.expired = true;
    return;
  }
  // Pivot on the vertex covering most of P.
  std::uint64_t px = p | x;
  int pivot = -1, best = -1;
  for (std::uint64_t m = px; m; m &= m - 1) {
    int u = std::countr_zero(m);
    int deg = std::popcount(p & ctx.adj[static_cast<std::size_t>(u)]);
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  }
  std::uint64_t cand = p & ~ctx.adj[static_cast<std::size_t>(pivot)];
  for (std::uint64_t m = cand; m; m &= m - 1) {
    int v = std::countr_zero(m);
    const std::uint64_t bit = std::uint64_t{1} << v;
    bron_kerbosch(ctx, r | bit, p & ctx.adj[static_cast<std::size_t>(v)],
                  x & ctx.adj[static_cast<std::size_t>(v)]);
    if (ctx.expired) return;
    p &= ~bit;
    x |= bit;
  }
}

std::vector<int> degeneracy_order(const std::vector<std::uint64_t>& adj, int v_count) {
  std::vector<int> order;
  std::uint64_t remaining = (v_count == 64) ? ~std::uint64_t{0}
                                            : ((std::uint64_t{1} << v_count) - 1);
  while (remaining) {
    int best = -1, best_deg = -1;
    for (std::uint64_t m = remaining; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int deg = std::popcount(adj[static_cast<std::size_t>(v)] & remaining);
      if (best == -1 || deg < best_deg) {
        best = v;
        best_deg = deg;
      }
    }
    order.push_back(best);
    remaining &= ~(std::uint64_t{1} << best);
  }
  return order;
}

}  // namespace

IuAggregate iu_maximal_families(int n, const SearchBudget& budget,
                                const std::function<void(const Family&)>& sink) {
  if (n < 3 || n > 6) throw std::invalid_argument("iu_maximal_families: need 3 <= n <= 6");

  CliqueContext ctx;
  const SetMask full = full_mask(n);
  for (SetMask m = 1; m < full; ++m) ctx.vertex.push_back(m);
  std::sort(ctx.vertex.begin(), ctx.vertex.end(), mask_canonical_less);
  ctx.v_count = static_cast<int>(ctx.vertex.size());
  ctx.adj.assign(static_cast<std::size_t>(ctx.v_count), 0);
  for (int u = 0; u < ctx.v_count; ++u)
    for (int v = u + 1; v < ctx.v_count; ++v) {
      const SetMask a = ctx.vertex[static_cast<std::size_t>(u)];
      const SetMask b = ctx.vertex[static_cast<std::size_t>(v)];
      if ((a & b) != 0 && (a | b) != full) {
        ctx.adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        ctx.adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
      }
    }
  ctx.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(budget.time_cap_seconds));

  IuAggregate agg;
  agg.n = n;
  ctx.emit = [&](std::uint64_t clique) {
    std::vector<SetMask> members;
    for (std::uint64_t m = clique; m; m &= m - 1)
      members.push_back(ctx.vertex[static_cast<std::size_t>(std::countr_zero(m))]);
    Family fam(n, std::move(members));
    ++agg.clique_count;
    if (fam.size() > agg.max_size ||
        (fam.size() == agg.max_size &&
         (!agg.max_size_witness || canonical_less(fam, *agg.max_size_witness)))) {
      agg.max_size = fam.size();
      agg.max_size_witness = fam;
    }
    const std::uint64_t beta = sturdiness(fam).value;
    if (beta > agg.max_sturdiness ||
        (beta == agg.max_sturdiness &&
         (!agg.max_sturdiness_witness || canonical_less(fam, *agg.max_sturdiness_witness)))) {
      agg.max_sturdiness = beta;
      agg.max_sturdiness_witness = fam;
    }
    if (sink) sink(fam);
  };

  const auto order = degeneracy_order(ctx.adj, ctx.v_count);
  std::vector<int> pos(static_cast<std::size_t>(ctx.v_count));
  for (int i = 0; i < ctx.v_count; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::uint64_t later_mask = 0;
  for (int i = ctx.v_count - 1; i >= 0; --i) later_mask |= std::uint64_t{1} << order[static_cast<std::size_t>(i)];
  std::uint64_t earlier = 0;
  for (int i = 0; i < ctx.v_count && !ctx.expired; ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    const std::uint64_t bit = std::uint64_t{1} << v;
    later_mask &= ~bit;
    bron_kerbosch(ctx, bit, ctx.adj[static_cast<std::size_t>(v)] & later_mask,
                  ctx.adj[static_cast<std::size_t>(v)] & earlier);
    earlier |= bit;
  }
  agg.exhaustive = !ctx.expired;
  return agg;
}

// ---------------------------------------------------------------------------
// Cross-Sperner measure inequality, exhaustive kernel.

namespace {

using I128 = unsigned __int128;

struct MeasureTable {
  std::int64_t denom = 0;               // b^n
  std::vector<std::int64_t> nu;         // per member mask: mu * b^n
};

MeasureTable measure_numerators(int n, const Rational& p) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("measure requires 0 < p < 1");
  const BigInt a = numerator(p), b = denominator(p);
  const BigInt D = int_pow(b, n);
  if (D > (BigInt(1) << 60)) throw std::invalid_argument("p denominator too large for the integer kernel");
  MeasureTable table;
  table.denom = to_i64(D, "measure denominator");
  const int m_count = 1 << n;
  table.nu.resize(static_cast<std::size_t>(m_count));
  for (int s = 0; s < m_count; ++s) {
    const int c = std::popcount(static_cast<unsigned>(s));
    table.nu[static_cast<std::size_t>(s)] = to_i64(int_pow(a, c) * int_pow(b - a, n - c), "measure numerator");
  }
  return table;
}

}  // namespace

T2Report t2_exhaustive(int n, const Rational& p) {
  if (n < 1 || n > 4) throw std::invalid_argument("t2_exhaustive: need 1 <= n <= 4");
  const MeasureTable mt = measure_numerators(n, p);
  const int m_count = 1 << n;                     // possible members
  const std::uint32_t fm_all = (m_count == 32) ? 0xffffffffu : ((1u << m_count) - 1);
  const std::size_t fm_count = std::size_t{1} << m_count;

  // rows[s] = members neither containing nor contained in s.
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(m_count), 0);
  for (int s = 0; s < m_count; ++s)
    for (int u = 0; u < m_count; ++u) {
      const int i = s & u;
      if (i != s && i != u) rows[static_cast<std::size_t>(s)] |= 1u << u;
    }

  // Family masks index subsets of the member space; measure numerators and
  // maximal partners extend one lowest bit at a time.
  std::vector<std::int64_t> measure(fm_count, 0);
  std::vector<std::uint32_t> partner(fm_count, fm_all);
  for (std::size_t fm = 1; fm < fm_count; ++fm) {
    const std::size_t prev = fm & (fm - 1);
    const int low = std::countr_zero(static_cast<std::uint32_t>(fm));
    measure[fm] = measure[prev] + mt.nu[static_cast<std::size_t>(low)];
    partner[fm] = partner[prev] & rows[static_cast<std::size_t>(low)];
  }

  T2Report report;
  report.n = n;
  report.p = p;
  const I128 D = static_cast<I128>(mt.denom);
  for (std::size_t fm = 1; fm < fm_count; ++fm) {
    ++report.families_scanned;
    const std::int64_t x = measure[fm];
    const std::int64_t y = measure[partner[fm]];
    // sqrt(x/D) + sqrt(y/D) <= 1  <=>  x+y <= D and 4xy <= (D-x-y)^2
    if (x + y > mt.denom) {
      ++report.budget_violations;
      continue;
    }
    const I128 rest = D - static_cast<I128>(x) - static_cast<I128>(y);
    if (4 * static_cast<I128>(x) * static_cast<I128>(y) > rest * rest) ++report.budget_violations;
  }

  // The four-way partition induced by any pair depends only on the two
  // up-closures, so checking all pairs of upsets covers every pair.
  std::vector<std::uint32_t> sup(static_cast<std::size_t>(m_count), 0);
  const int full_set = m_count - 1;
  for (int s = 0; s < m_count; ++s) {
    int rest = full_set & ~s;
    while (rest) {
      const int bit = rest & -rest;
      sup[static_cast<std::size_t>(s)] |= 1u << (s | bit);
      rest &= rest - 1;
    }
  }
  std::vector<std::uint32_t> upsets;
  for (std::uint32_t fm = 0; fm < fm_count; ++fm) {
    bool ok = true;
    for (std::uint32_t m = fm; m && ok; m &= m - 1) {
      const std::uint32_t need = sup[static_cast<std::size_t>(std::countr_zero(m))];
      ok = (fm & need) == need;
    }
    if (ok) upsets.push_back(fm);
  }
  report.upset_count = upsets.size();
  for (std::size_t i = 0; i < upsets.size(); ++i)
    for (std::size_t j = i; j < upsets.size(); ++j) {
      ++report.upset_pairs;
      const std::uint32_t u = upsets[i], v = upsets[j];
      const std::int64_t xa = measure[u & v];
      const std::int64_t xb = measure[u & ~v];
      const std::int64_t xc = measure[v & ~u];
      const std::int64_t xd = measure[fm_all & ~(u | v)];
      if (static_cast<I128>(xb) * static_cast<I128>(xc) >
          static_cast<I128>(xa) * static_cast<I128>(xd))
        ++report.identity_violations;
    }
  return report;
}

T2RandomReport t2_random_pairs(int n, std::uint64_t count, std::uint64_t seed,
                               std::span<const Rational> ps) {
  if (n < 2 || n > 12) throw std::invalid_argument("t2_random_pairs: need 2 <= n <= 12");
  if (ps.empty()) throw std::invalid_argument("t2_random_pairs: need at least one p");
  std::vector<MeasureTable> tables;
  for (const Rational& p : ps) tables.push_back(measure_numerators(n, p));

  std::mt19937_64 rng(seed);
  const int m_count = 1 << n;
  T2RandomReport report;
  report.n = n;
  std::vector<char> covf(static_cast<std::size_t>(m_count)), covg(static_cast<std::size_t>(m_count));

  for (std::uint64_t it = 0; it < count; ++it) {
    const int fsize = 1 + static_cast<int>(rng() % 6);
    std::vector<SetMask> fmem;
    for (int i = 0; i < fsize; ++i) fmem.push_back(static_cast<SetMask>(rng() % m_count));
    Family f(n, std::move(fmem));

    std::vector<SetMask> comp;
    for (int s = 0; s < m_count; ++s) {
      bool ok = true;
      for (SetMask m : f.members()) {
        const SetMask i = m & static_cast<SetMask>(s);
        if (i == m || i == static_cast<SetMask>(s)) {
          ok = false;
          break;
        }
      }
      if (ok) comp.push_back(static_cast<SetMask>(s));
    }
    std::vector<SetMask> gmem;
    if (!comp.empty()) {
      const int gsize = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < gsize; ++i) gmem.push_back(comp[rng() % comp.size()]);
    }
    Family g(n, std::move(gmem));
    ++report.pairs;

    for (const Rational& p : ps)
      if (!sperner_budget_check(f, g, p)) ++report.budget_violations;

    // Identity check on the same pair (it holds for arbitrary pairs).
    std::fill(covf.begin(), covf.end(), 0);
    std::fill(covg.begin(), covg.end(), 0);
    for (SetMask m : f.members()) covf[m] = 1;
    for (SetMask m : g.members()) covg[m] = 1;
    for (int b = 0; b < n; ++b)
      for (int s = 0; s < m_count; ++s)
        if (s & (1 << b)) {
          covf[static_cast<std::size_t>(s)] |= covf[static_cast<std::size_t>(s ^ (1 << b))];
          covg[static_cast<std::size_t>(s)] |= covg[static_cast<std::size_t>(s ^ (1 << b))];
        }
    for (const MeasureTable& mt : tables) {
      std::int64_t xa = 0, xb = 0, xc = 0, xd = 0;
      for (int s = 0; s < m_count; ++s) {
        const std::int64_t w = mt.nu[static_cast<std::size_t>(s)];
        if (covf[static_cast<std::size_t>(s)]) {
          if (covg[static_cast<std::size_t>(s)]) xa += w; else xb += w;
        } else {
          if (covg[static_cast<std::size_t>(s)]) xc += w; else xd += w;
        }
      }
      if (static_cast<I128>(xb) * static_cast<I128>(xc) >
          static_cast<I128>(xa) * static_cast<I128>(xd))
        ++report.identity_violations;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Sweeps.

const char* sweep_verdict_name(SweepVerdict v) {
  switch (v) {
    case SweepVerdict::pass: return "pass";
    case SweepVerdict::equality: return "equality";
    case SweepVerdict::expected_counterexample: return "expected-counterexample";
    case SweepVerdict::violation: return "violation";
    case SweepVerdict::skipped: return "skipped";
  }
  return "?";
}

WeightTable random_weight_table(int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> values(static_cast<std::size_t>(k) + 1);
  BigInt v = static_cast<long>(rng() % 4);
  for (int j = k; j >= 0; --j) {
    values[static_cast<std::size_t>(j)] = Rational(v);
    v += static_cast<long>(rng() % 4);
  }
  return WeightTable(std::move(values));
}

namespace {

std::vector<Rational> default_ps() {
  return {Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(9, 10)};
}

std::string fmt_params(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::string out;
  for (const auto& [key, value] : kv) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += value;
  }
  return out;
}

void sweep_t1(const SweepSpec& spec, std::vector<SweepOutcome>& out) {
  for (int n = std::max(3, spec.n_min); n <= std::min(6, spec.n_max); ++n) {
    IuAggregate agg = iu_maximal_families(n, spec.budget);
    const BigInt size_bound = BigInt(1) << (n - 2);
    const Rational beta_bound(BigInt(1) << n, 16);  // 2^(n-4), exact at n=3 too
    SweepOutcome o;
    o.target = "t1";
    o.params = fmt_params({{"n", std::to_string(n)}});
    o.optimum = "max_size=" + std::to_string(agg.max_size) +
                " max_beta=" + std::to_string(agg.max_sturdiness) +
                " cliques=" + std::to_string(agg.clique_count);
    o.bound = "size=" + size_bound.str() + " beta<=" + rational_to_string(beta_bound);
    const bool size_ok = BigInt(agg.max_size) == size_bound;
    const bool beta_ok = Rational(BigInt(agg.max_sturdiness)) <= beta_bound;
    if (!agg.exhaustive) {
      o.verdict = SweepVerdict::skipped;
      o.note = "time cap hit; enumeration incomplete";
    } else if (size_ok && beta_ok) {
      o.verdict = SweepVerdict::pass;
      o.witness_f = agg.max_sturdiness_witness;
    } else {
      o.verdict = SweepVerdict::violation;
      o.witness_f = size_ok ? agg.max_sturdiness_witness : agg.max_size_witness;
    }
    out.push_back(std::move(o));
  }
}

void sweep_t2(const SweepSpec& spec, std::vector<SweepOutcome>& out) {
  const std::vector<Rational> ps = spec.ps.empty() ? default_ps() : spec.ps;
  for (int n = std::max(1, spec.n_min); n <= std::min(4, spec.n_max); ++n)
    for (const Rational& p : ps) {
      T2Report rep = t2_exhaustive(n, p);
      SweepOutcome o;
      o.target = "t2";
      o.params = fmt_params({{"n", std::to_string(n)}, {"p", rational_to_string(p)}});
      o.optimum = "budget_violations=" + std::to_string(rep.budget_violations) +
                  " identity_violations=" + std::to_string(rep.identity_violations);
      o.bound = "0";
      o.verdict = (rep.budget_violations == 0 && rep.identity_violations == 0)
                      ? SweepVerdict::pass
                      : SweepVerdict::violation;
      o.note = "families=" + std::to_string(rep.families_scanned) +
               " upset_pairs=" + std::to_string(rep.upset_pairs);
      out.push_back(std::move(o));
    }
  if (spec.random_pairs > 0)
    for (int n = std::max(5, spec.n_min); n <= std::min(12, spec.n_max); ++n) {
      T2RandomReport rep = t2_random_pairs(n, spec.random_pairs, spec.seed, ps);
      SweepOutcome o;
      o.target = "t2";
      o.params = fmt_params({{"n", std::to_string(n)}, {"pairs", std::to_string(rep.pairs)},
                             {"seed", std::to_string(spec.seed)}});
      o.optimum = "budget_violations=" + std::to_string(rep.budget_violations) +
                  " identity_violations=" + std::to_string(rep.identity_violations);
      o.bound = "0";
      o.verdict = (rep.budget_violations == 0 && rep.identity_violations == 0)
                      ? SweepVerdict::pass
                      : SweepVerdict::violation;
      o.note = "random";
      out.push_back(std::move(o));
    }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed ^ (salt * 0x9e3779b97f4a7c15ull);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  return x;
}

void sweep_n1(const SweepSpec& spec, std::vector<SweepOutcome>& out) {
  for (int k = std::max(1, spec.k_min); k <= std::min(4, spec.k_max); ++k)
    for (int l = 1; l <= k; ++l)
      for (int lp = 1; lp <= l; ++lp)
        for (int t = std::max(1, spec.t_min); t <= std::min(lp, spec.t_max); ++t) {
          const Family uf = all_subsets_le(k, l);
          const Family ug = all_subsets_le(k, lp);
          std::vector<std::pair<std::string, std::pair<WeightTable, WeightTable>>> tables;
          for (int wn : {2, 3}) {
            auto [w1, w2] = weight_tables(SeparatedParams(wn, k, l, lp, t));
            tables.emplace_back("separated n=" + std::to_string(wn),
                                std::make_pair(std::move(w1), std::move(w2)));
          }
          const std::uint64_t salt =
              (static_cast<std::uint64_t>(k) << 24) ^ (static_cast<std::uint64_t>(l) << 16) ^
              (static_cast<std::uint64_t>(lp) << 8) ^ static_cast<std::uint64_t>(t);
          for (int r = 0; r < spec.random_tables; ++r) {
            WeightTable w1 = random_weight_table(k, mix_seed(spec.seed, salt * 2 + 1 + 97 * r));
            WeightTable w2 = random_weight_table(k, mix_seed(spec.seed, salt * 2 + 2 + 97 * r));
            tables.emplace_back("random " + std::to_string(r),
                                std::make_pair(std::move(w1), std::move(w2)));
          }
          for (const auto& [label, pair] : tables) {
            const auto& [w1, w2] = pair;
            PairMaxReport oracle = exhaustive_pair_max(uf, ug, t, w1, w2, spec.budget);
            N1Bound bound = n1_candidate_max(k, l, lp, t, w1, w2);
            SweepOutcome o;
            o.target = "n1";
            o.params = fmt_params({{"k", std::to_string(k)}, {"l", std::to_string(l)},
                                   {"lp", std::to_string(lp)}, {"t", std::to_string(t)},
                                   {"weights", label}});
            o.optimum = rational_to_string(oracle.optimum);
            o.bound = rational_to_string(bound.value);
            if (!oracle.exhaustive) {
              o.verdict = SweepVerdict::skipped;
              o.note = "budget exceeded";
            } else if (oracle.feasible && oracle.optimum == bound.value) {
              o.verdict = SweepVerdict::equality;
              o.witness_f = oracle.witness_f;
              o.witness_g = oracle.witness_g;
            } else {
              o.verdict = SweepVerdict::violation;
              o.witness_f = oracle.witness_f;
              o.witness_g = oracle.witness_g;
            }
            out.push_back(std::move(o));
          }
        }
}

void sweep_t3(const SweepSpec& spec, std::vector<SweepOutcome>& out) {
  for (int n = std::max(2, spec.n_min); n <= spec.n_max; ++n)
    for (int k = std::max(1, spec.k_min); k <= spec.k_max; ++k) {
      if (n * k > kMaxGroundSize) continue;
      for (int l = 1; l <= k; ++l)
        for (int lp = 1; lp <= l; ++lp)
          for (int t = std::max(1, spec.t_min); t <= std::min(lp, spec.t_max); ++t) {
            const SeparatedParams params(n, k, l, lp, t);
            SweepOutcome o;
            o.target = "t3";
            o.params = fmt_params({{"n", std::to_string(n)}, {"k", std::to_string(k)},
                                   {"l", std::to_string(l)}, {"lp", std::to_string(lp)},
                                   {"t", std::to_string(t)}});
            Family uf = enumerate_H(params.blocks(), l);
            Family ug = enumerate_H(params.blocks(), lp);
            if (static_cast<int>(std::min(uf.size(), ug.size())) > spec.budget.max_universe_bits) {
              o.verdict = SweepVerdict::skipped;
              o.note = "universe too large for exhaustive scan";
              out.push_back(std::move(o));
              continue;
            }
            const WeightTable unit = WeightTable::unit(n * k);
            PairMaxReport oracle = exhaustive_pair_max(uf, ug, t, unit, unit, spec.budget);
            T3Report rep = t3_bound(params);
            o.optimum = rational_to_string(oracle.optimum);
            o.bound = rep.bound.str();
            const Rational bound_q(rep.bound);
            if (!oracle.exhaustive) {
              o.verdict = SweepVerdict::skipped;
              o.note = "budget exceeded";
            } else if (oracle.optimum > bound_q) {
              o.verdict = SweepVerdict::violation;
              o.witness_f = oracle.witness_f;
              o.witness_g = oracle.witness_g;
            } else if (oracle.optimum == bound_q) {
              o.verdict = SweepVerdict::equality;
              o.witness_f = oracle.witness_f;
              o.witness_g = oracle.witness_g;
            } else {
              o.verdict = SweepVerdict::pass;
            }
            out.push_back(std::move(o));
          }
    }
}

void sweep_f23(const SweepSpec& spec, std::vector<SweepOutcome>& out) {
  for (int n = std::max(2, spec.n_min); n <= spec.n_max; ++n)
    for (int k = std::max(2, spec.k_min); k <= spec.k_max; ++k) {
      if (n * k > kMaxGroundSize) continue;
      for (int l = 2; l <= k; ++l)
        for (int lp = 2; lp <= l; ++lp) {
          const SeparatedParams params(n, k, l, lp, 1);
          SweepOutcome o;
          o.target = "f23";
          o.params = fmt_params({{"n", std::to_string(n)}, {"k", std::to_string(k)},
                                 {"l", std::to_string(l)}, {"lp", std::to_string(lp)}});
          const BigInt sum = f23_sum(n, k, l, lp);
          const BigInt enumerated =
              BigInt(build_candidate(params, Candidate::F0).size()) + 1;
          if (enumerated != sum) {
            o.verdict = SweepVerdict::violation;
            o.optimum = enumerated.str();
            o.bound = sum.str();
            o.note = "closed form disagrees with enumeration";
            out.push_back(std::move(o));
            continue;
          }
          Family uf = enumerate_H(params.blocks(), l);
          Family ug = enumerate_H(params.blocks(), lp);
          if (static_cast<int>(std::min(uf.size(), ug.size())) > spec.budget.max_universe_bits) {
            o.verdict = SweepVerdict::skipped;
            o.note = "universe too large for exhaustive scan";
            out.push_back(std::move(o));
            continue;
          }
          const WeightTable unit = WeightTable::unit(n * k);
          PairMaxReport oracle = exhaustive_pair_max(uf, ug, 1, unit, unit, spec.budget);
          o.optimum = rational_to_string(oracle.optimum);
          o.bound = sum.str();
          const Rational sum_q(sum);
          if (!oracle.exhaustive) {
            o.verdict = SweepVerdict::skipped;
            o.note = "budget exceeded";
          } else if (oracle.optimum == sum_q) {
            o.verdict = SweepVerdict::equality;
          } else if (oracle.optimum > sum_q) {
            o.witness_f = oracle.witness_f;
            o.witness_g = oracle.witness_g;
            if (n > 3 * l) {
              o.verdict = SweepVerdict::violation;
            } else {
              o.verdict = SweepVerdict::expected_counterexample;
              o.note = "optimum exceeds the closed form outside its n > 3l hypothesis";
            }
          } else {
            // The candidate pair is feasible, so the oracle can never sit
            // below the closed form.
            o.verdict = SweepVerdict::violation;
            o.note = "oracle below the closed form";
          }
          out.push_back(std::move(o));
        }
    }
}

}  // namespace

std::vector<SweepOutcome> extremal_sweep(const SweepSpec& spec) {
  std::vector<SweepOutcome> out;
  if (spec.target == "t1")
    sweep_t1(spec, out);
  else if (spec.target == "t2")
    sweep_t2(spec, out);
  else if (spec.target == "n1")
    sweep_n1(spec, out);
  else if (spec.target == "t3")
    sweep_t3(spec, out);
  else if (spec.target == "f23")
    sweep_f23(spec, out);
  else
    throw std::invalid_argument("unknown sweep target '" + spec.target +
                                "' (expected t1|t2|n1|t3|f23)");
  return out;
}

}  // namespace extset
