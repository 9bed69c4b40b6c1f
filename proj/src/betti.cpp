#include "sqpow/betti.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sqpow/sparse_rank.hpp"

namespace sqpow {

void BettiTable::set(int i, VertexSet alpha, std::size_t dim) {
  if (dim == 0) {
    entries_.erase(Key{i, alpha});
  } else {
    entries_[Key{i, alpha}] = dim;
  }
}

std::size_t BettiTable::at(int i, VertexSet alpha) const {
  auto it = entries_.find(Key{i, alpha});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<BettiEntry> BettiTable::entries() const {
  std::vector<BettiEntry> out;
  out.reserve(entries_.size());
  for (const auto& [key, dim] : entries_) out.push_back({key.i, key.alpha, dim});
  return out;
}

std::map<std::pair<int, int>, std::size_t> BettiTable::graded() const {
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& [key, dim] : entries_) out[{key.i, key.alpha.size()}] += dim;
  return out;
}

std::size_t BettiTable::graded(int i, int j) const {
  std::size_t total = 0;
  for (const auto& [key, dim] : entries_) {
    if (key.i == i && key.alpha.size() == j) total += dim;
  }
  return total;
}

std::size_t BettiTable::graded_quotient(int i, int j) const {
  if (i == 0) return j == 0 ? 1 : 0;
  return graded(i - 1, j);
}

int BettiTable::regularity() const {
  if (entries_.empty()) throw std::domain_error("regularity of an empty Betti table");
  int reg = 0;
  for (const auto& [key, dim] : entries_) reg = std::max(reg, key.alpha.size() - key.i);
  return reg;
}

int BettiTable::projective_dimension() const {
  if (entries_.empty()) throw std::domain_error("projective dimension of an empty Betti table");
  int pd = 0;
  for (const auto& [key, dim] : entries_) pd = std::max(pd, key.i);
  return pd;
}

namespace {

/// Largest lcm support the engine accepts (its membership table has 2^n bytes).
constexpr int kMaxLcmSize = 24;

/// Hochster computations in coordinates local to lcm(I): bit b of a local
/// mask stands for the b-th variable of the lcm.
class HochsterEngine {
 public:
  explicit HochsterEngine(const SquarefreeIdeal& ideal) {
    const VertexSet lcm = lcm_of_generators(ideal);
    if (lcm.size() > kMaxLcmSize) {
      throw std::invalid_argument("Betti computation over " + std::to_string(lcm.size()) +
                                  " variables exceeds the cap of " + std::to_string(kMaxLcmSize));
    }
    globals_ = lcm.to_vector();
    width_ = static_cast<int>(globals_.size());
    const std::size_t n = std::size_t{1} << width_;
    in_ideal_.assign(n, 0);
    union_below_.assign(n, 0);
    for (VertexSet g : ideal.generators()) {
      const std::uint32_t l = to_local(g);
      in_ideal_[l] = 1;
      union_below_[l] = l;
    }
    // Upward closure: S is in I iff S contains a generator; union_below_[S] is
    // the union of all generators inside S.
    for (int b = 0; b < width_; ++b) {
      const std::uint32_t bit = std::uint32_t{1} << b;
      for (std::uint32_t s = 0; s < n; ++s) {
        if (s & bit) {
          in_ideal_[s] |= in_ideal_[s ^ bit];
          union_below_[s] |= union_below_[s ^ bit];
        }
      }
    }
  }

  int width() const { return width_; }
  std::uint32_t full() const { return width_ == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << width_) - 1); }
  bool in_ideal(std::uint32_t s) const { return in_ideal_[s] != 0; }

  std::uint32_t to_local(VertexSet s) const {
    std::uint32_t out = 0;
    for (int b = 0; b < width_; ++b) {
      if (s.contains(globals_[static_cast<std::size_t>(b)])) out |= std::uint32_t{1} << b;
    }
    return out;
  }
  VertexSet to_global(std::uint32_t s) const {
    VertexSet out;
    for (; s != 0; s &= s - 1) out.insert(globals_[static_cast<std::size_t>(std::countr_zero(s))]);
    return out;
  }

  SimplicialComplex complex_at(std::uint32_t alpha) const {
    std::vector<VertexSet> faces;
    if (in_ideal(alpha)) {
      for_each_subset(VertexSet(alpha), [&](VertexSet w) {
        if (in_ideal(alpha & ~static_cast<std::uint32_t>(w.bits()))) faces.push_back(to_global(static_cast<std::uint32_t>(w.bits())));
      });
    }
    return SimplicialComplex::from_faces(to_global(alpha), std::move(faces));
  }

  /// Appends (i, b_{i,α}) for the nonzero Betti numbers at local α.
  void compute(std::uint32_t alpha, const FieldSpec& field, HomologyMethod method, std::vector<std::uint32_t>& index,
               std::vector<std::pair<int, std::size_t>>& out) const {
    if (method == HomologyMethod::full_complex) {
      const auto h = reduced_homology_dims(complex_at(alpha), field);
      for (std::size_t d = 0; d < h.dims.size(); ++d) {
        if (h.dims[d] != 0) out.emplace_back(static_cast<int>(d), h.dims[d]);
      }
      return;
    }
    if (!in_ideal(alpha)) return;  // void complex
    // A variable of α outside every generator dividing x^α is a cone point.
    if (union_below_[alpha] != alpha) return;
    std::uint32_t verts = 0;
    for (std::uint32_t r = alpha; r != 0; r &= r - 1) {
      const std::uint32_t bit = r & (~r + 1);
      if (in_ideal(alpha ^ bit)) verts |= bit;
    }
    if (verts == 0) {  // K^α = {∅}: α is a minimal generator
      out.emplace_back(0, 1);
      return;
    }
    // Count the faces that survive the reduction for each candidate vertex.
    int crit[32] = {};
    for (std::uint32_t c = alpha;; c = (c - 1) & alpha) {
      // c = α \ W ranges over complements of faces
      if (in_ideal(c)) {
        for (std::uint32_t r = c & verts; r != 0; r &= r - 1) {
          const std::uint32_t bit = r & (~r + 1);
          if (!in_ideal(c ^ bit)) ++crit[std::countr_zero(bit)];
        }
      }
      if (c == 0) break;
    }
    int best = -1;
    for (std::uint32_t r = verts; r != 0; r &= r - 1) {
      const int b = std::countr_zero(r);
      if (best < 0 || crit[b] < crit[best]) best = b;
    }
    if (crit[best] == 0) return;  // cone over the chosen vertex
    const std::uint32_t v = std::uint32_t{1} << best;
    const std::uint32_t rest = alpha & ~v;

    // Critical faces W: v ∉ W, α\W ∈ I, (α\W)\{v} ∉ I. Group g holds |W| = g + 1.
    std::vector<std::size_t> sizes;
    std::vector<std::uint32_t> critical;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t c = sub | v;
      if (in_ideal(c) && !in_ideal(sub)) {
        const std::uint32_t w = alpha ^ c;
        const auto g = static_cast<std::size_t>(std::popcount(w) - 1);
        if (sizes.size() <= g) sizes.resize(g + 1, 0);
        index[w] = static_cast<std::uint32_t>(sizes[g]++);
        critical.push_back(w);
      }
      if (sub == 0) break;
    }
    std::vector<BoundaryMap> boundaries(sizes.size());
    for (std::uint32_t w : critical) {
      const auto g = static_cast<std::size_t>(std::popcount(w) - 1);
      if (g == 0) continue;
      IntColumn col;
      int sign = 1;
      for (std::uint32_t r = w; r != 0; r &= r - 1) {
        const std::uint32_t face = w ^ (r & (~r + 1));
        // face is critical iff adding v does not give a face
        if (!in_ideal((alpha ^ face) & ~v)) col.emplace_back(index[face], sign);
        sign = -sign;
      }
      std::sort(col.begin(), col.end());
      boundaries[g].columns.push_back(std::move(col));
    }
    const auto dims = chain_homology(sizes, boundaries, field);
    for (std::size_t g = 0; g < dims.size(); ++g) {
      if (dims[g] != 0) out.emplace_back(static_cast<int>(g) + 1, dims[g]);
    }
  }

 private:
  std::vector<Vertex> globals_;
  int width_ = 0;
  std::vector<std::uint8_t> in_ideal_;
  std::vector<std::uint32_t> union_below_;
};

void require_nonzero(const SquarefreeIdeal& ideal, const char* what) {
  if (ideal.is_zero()) throw std::domain_error(std::string(what) + ": zero ideal");
}

}  // namespace

SimplicialComplex upper_koszul(const SquarefreeIdeal& ideal, VertexSet alpha) {
  std::vector<VertexSet> faces;
  if (ideal.contains(alpha)) {
    for_each_subset(alpha, [&](VertexSet w) {
      if (ideal.contains(alpha - w)) faces.push_back(w);
    });
  }
  return SimplicialComplex::from_faces(alpha, std::move(faces));
}

BettiTable betti_table(const SquarefreeIdeal& ideal, const FieldSpec& field, const BettiOptions& options) {
  require_nonzero(ideal, "betti_table");
  const HochsterEngine engine(ideal);
  const std::uint32_t count = engine.full() + 1;

  unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::uint32_t>(1, count / 64));

  using Result = std::pair<std::uint32_t, std::pair<int, std::size_t>>;
  std::vector<std::vector<Result>> results(threads);
  std::atomic<std::uint32_t> next{0};
  auto work = [&](unsigned t) {
    std::vector<std::uint32_t> index(std::size_t{1} << engine.width());
    std::vector<std::pair<int, std::size_t>> local;
    constexpr std::uint32_t chunk = 64;
    for (std::uint32_t start = next.fetch_add(chunk); start < count; start = next.fetch_add(chunk)) {
      const std::uint32_t stop = std::min(count, start + chunk);
      for (std::uint32_t alpha = start; alpha < stop; ++alpha) {
        local.clear();
        engine.compute(alpha, field, options.method, index, local);
        for (const auto& e : local) results[t].emplace_back(alpha, e);
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  BettiTable table(ideal.ambient(), field);
  for (const auto& part : results) {
    for (const auto& [alpha, e] : part) table.set(e.first, engine.to_global(alpha), e.second);
  }
  return table;
}

std::map<int, std::size_t> multigraded_betti(const SquarefreeIdeal& ideal, VertexSet alpha, const FieldSpec& field,
                                             HomologyMethod method) {
  const SquarefreeIdeal below = restriction(ideal, alpha);
  if (below.is_zero() || lcm_of_generators(below) != alpha) return {};
  const HochsterEngine engine(below);
  std::vector<std::uint32_t> index(std::size_t{1} << engine.width());
  std::vector<std::pair<int, std::size_t>> local;
  engine.compute(engine.full(), field, method, index, local);
  return {local.begin(), local.end()};
}

int regularity(const SquarefreeIdeal& ideal, const FieldSpec& field, const BettiOptions& options) {
  require_nonzero(ideal, "regularity");
  return betti_table(ideal, field, options).regularity();
}

bool has_linear_resolution(const SquarefreeIdeal& ideal, const FieldSpec& field, const BettiOptions& options) {
  require_nonzero(ideal, "has_linear_resolution");
  const int d = ideal.generator_degree();
  if (d < 0) throw std::invalid_argument("has_linear_resolution: ideal is not generated in a single degree");
  return betti_table(ideal, field, options).regularity() == d;
}

namespace {

class TaylorOracle {
 public:
  TaylorOracle(const SquarefreeIdeal& ideal, int cap) {
    const int t = ideal.num_generators();
    if (t > cap) {
      throw std::invalid_argument("Taylor oracle: " + std::to_string(t) + " generators exceed the cap of " +
                                  std::to_string(cap));
    }
    const auto& gens = ideal.generators();
    lcm_of_.assign(std::size_t{1} << t, VertexSet{});
    for (std::uint32_t s = 1; s < lcm_of_.size(); ++s) {
      const auto low = static_cast<std::size_t>(std::countr_zero(s));
      lcm_of_[s] = lcm_of_[s & (s - 1)] | gens[low];
    }
  }

  std::map<int, std::size_t> strand(VertexSet alpha, const FieldSpec& field) const {
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t s = 1; s < lcm_of_.size(); ++s) {
      if (lcm_of_[s] == alpha) subsets.push_back(s);
    }
    return homology(subsets, alpha, field);
  }

  /// All nonempty generator subsets grouped by their lcm.
  std::map<std::uint64_t, std::vector<std::uint32_t>> buckets() const {
    std::map<std::uint64_t, std::vector<std::uint32_t>> out;
    for (std::uint32_t s = 1; s < lcm_of_.size(); ++s) out[lcm_of_[s].bits()].push_back(s);
    return out;
  }

  std::map<int, std::size_t> homology(const std::vector<std::uint32_t>& subsets, VertexSet alpha,
                                      const FieldSpec& field) const {
    if (subsets.empty()) return {};
    std::vector<std::size_t> sizes;
    std::map<std::uint32_t, std::uint32_t> index;
    for (std::uint32_t s : subsets) {
      const auto g = static_cast<std::size_t>(std::popcount(s) - 1);
      if (sizes.size() <= g) sizes.resize(g + 1, 0);
      index[s] = static_cast<std::uint32_t>(sizes[g]++);
    }
    std::vector<BoundaryMap> boundaries(sizes.size());
    for (std::uint32_t s : subsets) {
      const auto g = static_cast<std::size_t>(std::popcount(s) - 1);
      if (g == 0) continue;
      IntColumn col;
      int sign = 1;
      for (std::uint32_t r = s; r != 0; r &= r - 1) {
        const std::uint32_t face = s ^ (r & (~r + 1));
        if (lcm_of_[face] == alpha) col.emplace_back(index.at(face), sign);
        sign = -sign;
      }
      std::sort(col.begin(), col.end());
      boundaries[g].columns.push_back(std::move(col));
    }
    const auto dims = chain_homology(sizes, boundaries, field);
    std::map<int, std::size_t> out;
    for (std::size_t g = 0; g < dims.size(); ++g) {
      if (dims[g] != 0) out[static_cast<int>(g)] = dims[g];
    }
    return out;
  }

 private:
  std::vector<VertexSet> lcm_of_;
};

}  // namespace

std::map<int, std::size_t> taylor_strand_betti(const SquarefreeIdeal& ideal, VertexSet alpha, const FieldSpec& field,
                                               int cap) {
  require_nonzero(ideal, "taylor_strand_betti");
  return TaylorOracle(ideal, cap).strand(alpha, field);
}

BettiTable taylor_betti_table(const SquarefreeIdeal& ideal, const FieldSpec& field, int cap) {
  require_nonzero(ideal, "taylor_betti_table");
  const TaylorOracle oracle(ideal, cap);
  BettiTable table(ideal.ambient(), field);
  for (const auto& [alpha, subsets] : oracle.buckets()) {
    for (const auto& [i, dim] : oracle.homology(subsets, VertexSet(alpha), field)) table.set(i, VertexSet(alpha), dim);
  }
  return table;
}

std::string format_graded(const BettiTable& table) {
  if (table.empty()) return "(zero)\n";
  const auto graded = table.graded();
  int pd = 0, lo = 1 << 30, hi = 0;
  for (const auto& [ij, dim] : graded) {
    pd = std::max(pd, ij.first);
    lo = std::min(lo, ij.second - ij.first);
    hi = std::max(hi, ij.second - ij.first);
  }
  std::vector<std::size_t> totals(static_cast<std::size_t>(pd) + 1, 0);
  for (const auto& [ij, dim] : graded) totals[static_cast<std::size_t>(ij.first)] += dim;

  std::size_t width = 1;
  for (std::size_t t : totals) width = std::max(width, std::to_string(t).size());
  std::ostringstream out;
  auto cell = [&](const std::string& s) { out << ' ' << std::setw(static_cast<int>(width)) << s; };
  out << std::setw(7) << "";
  for (int i = 0; i <= pd; ++i) cell(std::to_string(i));
  out << "\n" << std::setw(7) << "total:";
  for (std::size_t t : totals) cell(std::to_string(t));
  out << "\n";
  for (int r = lo; r <= hi; ++r) {
    out << std::setw(6) << r << ':';
    for (int i = 0; i <= pd; ++i) {
      auto it = graded.find({i, i + r});
      cell(it == graded.end() ? "." : std::to_string(it->second));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sqpow
