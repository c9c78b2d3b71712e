#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "bmg/enumeration.hpp"

namespace bmg {

namespace {

using Row = std::uint32_t;

bool has(Row r, int i) { return ((r >> i) & 1U) != 0; }

// Adjacency of one graph in the frame. ox[k] holds the columns x_k points to,
// oy[l] the rows y_l points to.
struct State {
  int a = 0;
  int b = 0;
  std::array<Row, 32> ox{};
  std::array<Row, 32> oy{};

  void toggle(int bit) {
    if (bit < a * b) {
      ox[static_cast<std::size_t>(bit / b)] ^= Row{1} << (bit % b);
    } else {
      bit -= a * b;
      oy[static_cast<std::size_t>(bit / a)] ^= Row{1} << (bit % a);
    }
  }
};

struct Derived {
  std::array<Row, 32> ix{};  // columns pointing to x_k
  std::array<Row, 32> iy{};  // rows pointing to y_l
  std::array<Row, 32> n2x{};
  std::array<Row, 32> n2y{};
};

Row image(const std::array<Row, 32>& rows, Row s) {
  Row out = 0;
  for (; s; s &= s - 1) out |= rows[static_cast<std::size_t>(std::countr_zero(s))];
  return out;
}

bool n1_to_n3(const State& s, Derived& d) {
  const int a = s.a;
  const int b = s.b;
  for (int k = 0; k < a; ++k) {
    d.n2x[static_cast<std::size_t>(k)] = image(s.oy, s.ox[static_cast<std::size_t>(k)]);
    if ((image(s.ox, d.n2x[static_cast<std::size_t>(k)]) & ~s.ox[static_cast<std::size_t>(k)]) != 0) return false;
  }
  for (int l = 0; l < b; ++l) {
    d.n2y[static_cast<std::size_t>(l)] = image(s.ox, s.oy[static_cast<std::size_t>(l)]);
    if ((image(s.oy, d.n2y[static_cast<std::size_t>(l)]) & ~s.oy[static_cast<std::size_t>(l)]) != 0) return false;
  }
  d.ix.fill(0);
  d.iy.fill(0);
  for (int k = 0; k < a; ++k) {
    for (Row r = s.ox[static_cast<std::size_t>(k)]; r; r &= r - 1) {
      d.iy[static_cast<std::size_t>(std::countr_zero(r))] |= Row{1} << k;
    }
  }
  for (int l = 0; l < b; ++l) {
    for (Row r = s.oy[static_cast<std::size_t>(l)]; r; r &= r - 1) {
      d.ix[static_cast<std::size_t>(std::countr_zero(r))] |= Row{1} << l;
    }
  }
  for (int k = 0; k < a; ++k) {
    Row xk = s.ox[static_cast<std::size_t>(k)];
    for (int l = 0; l < b; ++l) {
      Row yl = s.oy[static_cast<std::size_t>(l)];
      if (has(xk, l) || has(yl, k)) continue;
      if ((d.n2x[static_cast<std::size_t>(k)] & yl) != 0 || (d.n2y[static_cast<std::size_t>(l)] & xk) != 0) {
        return false;
      }
    }
  }
  auto n3 = [](int size, const std::array<Row, 32>& out, const std::array<Row, 32>& in,
               const std::array<Row, 32>& two) {
    for (int u = 0; u < size; ++u) {
      for (int v = u + 1; v < size; ++v) {
        Row nu = out[static_cast<std::size_t>(u)];
        Row nv = out[static_cast<std::size_t>(v)];
        if (has(two[static_cast<std::size_t>(v)], u) || has(two[static_cast<std::size_t>(u)], v) || (nu & nv) == 0) {
          continue;
        }
        if (in[static_cast<std::size_t>(u)] != in[static_cast<std::size_t>(v)]) return false;
        if ((nu & ~nv) != 0 && (nv & ~nu) != 0) return false;
      }
    }
    return true;
  };
  return n3(a, s.ox, d.ix, d.n2x) && n3(b, s.oy, d.iy, d.n2y);
}

GraphTraits traits_of(const State& s, const Derived& d) {
  GraphTraits t;
  t.n1_n3 = true;
  const int a = s.a;
  const int b = s.b;
  t.sink_free = true;
  for (int k = 0; k < a; ++k) t.sink_free = t.sink_free && s.ox[static_cast<std::size_t>(k)] != 0;
  for (int l = 0; l < b; ++l) t.sink_free = t.sink_free && s.oy[static_cast<std::size_t>(l)] != 0;

  t.no_equivalent = true;
  for (int u = 0; u < a; ++u) {
    for (int v = u + 1; v < a; ++v) {
      if (s.ox[static_cast<std::size_t>(u)] == s.ox[static_cast<std::size_t>(v)] &&
          d.ix[static_cast<std::size_t>(u)] == d.ix[static_cast<std::size_t>(v)]) {
        t.no_equivalent = false;
      }
    }
  }
  for (int u = 0; u < b; ++u) {
    for (int v = u + 1; v < b; ++v) {
      if (s.oy[static_cast<std::size_t>(u)] == s.oy[static_cast<std::size_t>(v)] &&
          d.iy[static_cast<std::size_t>(u)] == d.iy[static_cast<std::size_t>(v)]) {
        t.no_equivalent = false;
      }
    }
  }

  std::array<Row, 32> adj_x{};
  std::array<Row, 32> adj_y{};
  for (int k = 0; k < a; ++k) adj_x[static_cast<std::size_t>(k)] = s.ox[static_cast<std::size_t>(k)] | d.ix[static_cast<std::size_t>(k)];
  for (int l = 0; l < b; ++l) adj_y[static_cast<std::size_t>(l)] = s.oy[static_cast<std::size_t>(l)] | d.iy[static_cast<std::size_t>(l)];
  Row rx = 1;
  Row ry = 0;
  while (true) {
    Row nry = ry | image(adj_x, rx);
    Row nrx = rx | image(adj_y, nry);
    if (nrx == rx && nry == ry) break;
    rx = nrx;
    ry = nry;
  }
  auto full = [](int size) { return size == 32 ? ~Row{0} : (Row{1} << size) - 1; };
  t.connected = rx == full(a) && ry == full(b);
  return t;
}

// Certificate of the current graph: signatures of the non-permuted side
// against every ordering of the permuted side, sorted and packed.
class Coder {
 public:
  Coder(int a, int b, bool allow_swap) : a_(a), b_(b) {
    if (allow_swap && a == b) {
      use_rows_ = use_cols_ = true;
    } else if (allow_swap && b < a) {
      use_cols_ = true;
    } else {
      use_rows_ = true;
    }
    if (use_rows_) perms_rows_ = permutations(a);
    if (use_cols_) perms_cols_ = permutations(b);
  }

  std::uint64_t code(const State& s, const Derived& d) const {
    std::uint64_t best = ~std::uint64_t{0};
    // Permuting rows: column y_l is described by (iy[l], oy[l]).
    if (use_rows_) best = std::min(best, side(perms_rows_, a_, b_, d.iy, s.oy));
    if (use_cols_) best = std::min(best, side(perms_cols_, b_, a_, d.ix, s.ox));
    return best;
  }

 private:
  static std::vector<std::vector<int>> permutations(int p) {
    std::vector<int> perm(static_cast<std::size_t>(p));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> all;
    do {
      all.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return all;
  }

  static std::uint64_t side(const std::vector<std::vector<int>>& perms, int p, int q,
                            const std::array<Row, 32>& from, const std::array<Row, 32>& to) {
    std::uint64_t best = ~std::uint64_t{0};
    std::array<std::uint64_t, 32> sig{};
    for (const auto& perm : perms) {
      for (int c = 0; c < q; ++c) {
        std::uint64_t v = 0;
        Row f = from[static_cast<std::size_t>(c)];
        Row t = to[static_cast<std::size_t>(c)];
        for (int r = 0; r < p; ++r) {
          int src = perm[static_cast<std::size_t>(r)];
          v |= std::uint64_t{(f >> src) & 1U} << r;
          v |= std::uint64_t{(t >> src) & 1U} << (p + r);
        }
        sig[static_cast<std::size_t>(c)] = v;
      }
      std::sort(sig.begin(), sig.begin() + q);
      std::uint64_t packed = sig[0];
      for (int c = 1; c < q; ++c) packed = (packed << (2 * p)) | sig[static_cast<std::size_t>(c)];
      best = std::min(best, packed);
    }
    return best;
  }

  int a_;
  int b_;
  bool use_rows_ = false;
  bool use_cols_ = false;
  std::vector<std::vector<int>> perms_rows_;
  std::vector<std::vector<int>> perms_cols_;
};

using ClassMap = std::unordered_map<std::uint64_t, ClassRecord>;

void scan_chunk(const ScanFrame& frame, const Coder& coder, std::uint64_t lo, std::uint64_t hi, ClassMap& out) {
  State s;
  s.a = frame.first_size();
  s.b = frame.second_size();
  std::uint64_t gray = lo ^ (lo >> 1);
  std::uint64_t mask = frame.base;
  for (std::size_t k = 0; k < frame.free_bits.size(); ++k) {
    if ((gray >> k) & 1U) mask |= std::uint64_t{1} << frame.free_bits[k];
  }
  for (int bit = 0; bit < 2 * s.a * s.b; ++bit) {
    if ((mask >> bit) & 1U) s.toggle(bit);
  }
  Derived d;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (n1_to_n3(s, d)) {
      auto [it, fresh] = out.try_emplace(coder.code(s, d), ClassRecord{mask, {}});
      if (fresh) {
        it->second.traits = traits_of(s, d);
      } else if (mask < it->second.mask) {
        it->second.mask = mask;
      }
    }
    if (idx + 1 < hi) {
      int bit = frame.free_bits[static_cast<std::size_t>(std::countr_zero(idx + 1))];
      s.toggle(bit);
      mask ^= std::uint64_t{1} << bit;
    }
  }
}

}  // namespace

std::vector<ClassRecord> scan_parallel(const ScanFrame& frame, bool allow_swap, int workers) {
  const std::size_t f = frame.free_bits.size();
  if (f > 48) throw InvalidArgument("too many free edge slots for an exhaustive scan");
  if (workers <= 0) workers = omp_get_max_threads();
  const std::uint64_t total = std::uint64_t{1} << f;
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
  const Coder coder(frame.first_size(), frame.second_size(), allow_swap);

  std::vector<ClassMap> partial(chunks);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    std::uint64_t lo = total / chunks * static_cast<std::uint64_t>(c);
    std::uint64_t hi = static_cast<std::uint64_t>(c) + 1 == chunks ? total : lo + total / chunks;
    scan_chunk(frame, coder, lo, hi, partial[static_cast<std::size_t>(c)]);
  }

  ClassMap merged;
  for (auto& part : partial) {
    for (const auto& [code, rec] : part) {
      auto [it, fresh] = merged.try_emplace(code, rec);
      if (!fresh && rec.mask < it->second.mask) it->second.mask = rec.mask;
    }
  }
  std::vector<ClassRecord> out;
  out.reserve(merged.size());
  for (const auto& [code, rec] : merged) out.push_back(rec);
  std::sort(out.begin(), out.end(), [](const ClassRecord& x, const ClassRecord& y) { return x.mask < y.mask; });
  return out;
}

}  // namespace bmg
