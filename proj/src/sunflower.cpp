#include "qsun/sunflower.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qsun {

std::string_view to_string(SunflowerKind kind) {
  return kind == SunflowerKind::set_like ? "set_like" : "general_position";
}

namespace {

void check_members(std::span<const Subspace> members) {
  if (members.size() < 3) throw std::invalid_argument("sunflowers need s >= 3 members");
  const auto& first = members.front();
  for (const auto& m : members) {
    if (!(m.field() == first.field()) || m.ambient_dim() != first.ambient_dim()) {
      throw std::invalid_argument("sunflower members live in different ambient spaces");
    }
    if (m.dim() != first.dim()) throw std::invalid_argument("sunflower members must have equal dimension");
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j]) throw std::invalid_argument("sunflower members must be distinct");
    }
  }
}

std::optional<Subspace> common_pairwise_intersection(std::span<const Subspace> members) {
  std::optional<Subspace> kernel;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      Subspace k = intersect({members[i], members[j]});
      if (!kernel) {
        kernel = std::move(k);
      } else if (!(*kernel == k)) {
        return std::nullopt;
      }
    }
  }
  return kernel;
}

std::uint64_t to_u64(const BigInt& v) { return v.convert_to<std::uint64_t>(); }

// Position of a strictly increasing tuple in the lex order of all s-subsets
// of {0, ..., n-1}.
std::uint64_t lex_rank(const std::vector<std::size_t>& tuple, std::size_t n) {
  const std::size_t s = tuple.size();
  std::uint64_t r = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t v = start; v < tuple[i]; ++v) r += to_u64(binomial(n - 1 - v, s - 1 - i));
    start = tuple[i] + 1;
  }
  return r;
}

class Search {
 public:
  Search(const ConstantDimensionFamily& family, std::size_t s, SunflowerKind mode,
         const VerifyOptions& options)
      : family_(family), n_(family.size()), s_(s), mode_(mode) {
    std::vector<Subspace> perps;
    perps.reserve(n_);
    for (const auto& m : family.members()) perps.push_back(orthocomplement(m));

    std::map<Subspace, std::uint32_t> ids;
    pair_id_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        Subspace k = orthocomplement(sum({perps[i], perps[j]}));
        auto [it, inserted] = ids.try_emplace(std::move(k), static_cast<std::uint32_t>(kernels_.size()));
        if (inserted) kernels_.push_back(it->first);
        pair_id_[i * n_ + j] = pair_id_[j * n_ + i] = it->second;
      }
    }
    if (options.kernel) {
      auto it = ids.find(*options.kernel);
      // A kernel no pair realizes admits no witness at all.
      required_kernel_ = it == ids.end() ? kNone : it->second;
      constrained_ = true;
    }
  }

  // Lex-first witness among tuples whose first index is c0.
  std::optional<std::vector<std::size_t>> search_from(std::size_t c0) const {
    std::vector<std::size_t> tuple{c0};
    tuple.reserve(s_);
    if (extend(tuple, kNone)) return tuple;
    return std::nullopt;
  }

  SunflowerWitness make_witness(const std::vector<std::size_t>& t) const {
    const Subspace& kernel = kernels_[pair_id_[t[0] * n_ + t[1]]];
    return {t, kernel, mode_, {kernel.dim(), family_.member_dim(), sum_dim(t)}};
  }

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  std::size_t sum_dim(const std::vector<std::size_t>& t) const {
    std::vector<Subspace> members;
    for (auto i : t) members.push_back(family_[i]);
    return sum(members).dim();
  }

  bool extend(std::vector<std::size_t>& tuple, std::uint32_t id) const {
    const std::size_t depth = tuple.size();
    if (depth == s_) {
      if (mode_ == SunflowerKind::set_like) return true;
      const std::size_t d = kernels_[id].dim();
      const std::size_t k = family_.member_dim();
      return sum_dim(tuple) == d + s_ * (k - d);
    }
    for (std::size_t c = tuple.back() + 1; c + (s_ - depth) <= n_; ++c) {
      std::uint32_t next = id;
      if (depth == 1) {
        next = pair_id_[tuple[0] * n_ + c];
        if (constrained_ && next != required_kernel_) continue;
      } else {
        bool ok = true;
        for (auto t : tuple) {
          if (pair_id_[t * n_ + c] != id) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
      }
      tuple.push_back(c);
      if (extend(tuple, next)) return true;
      tuple.pop_back();
    }
    return false;
  }

  const ConstantDimensionFamily& family_;
  std::size_t n_;
  std::size_t s_;
  SunflowerKind mode_;
  std::vector<std::uint32_t> pair_id_;
  std::vector<Subspace> kernels_;
  bool constrained_ = false;
  std::uint32_t required_kernel_ = kNone;
};

}  // namespace

std::optional<Subspace> setlike_kernel(std::span<const Subspace> members) {
  check_members(members);
  return common_pairwise_intersection(members);
}

GpReport is_gp_sunflower(std::span<const Subspace> members) {
  GpReport report;
  report.kernel = setlike_kernel(members);
  report.dims.member_dim = members.front().dim();
  report.dims.sum_dim = sum(members).dim();
  if (report.kernel) {
    report.dims.kernel_dim = report.kernel->dim();
    report.is_sunflower = report.dims.sum_dim == report.dims.general_position_target(members.size());
  }
  return report;
}

FreenessCertificate verify_free(const ConstantDimensionFamily& family, std::size_t s, SunflowerKind mode,
                                const VerifyOptions& options) {
  if (s < 3) throw std::invalid_argument("sunflower size s must be >= 3");
  if (family.size() < s) {
    throw std::invalid_argument("family of " + std::to_string(family.size()) + " members has no " +
                                std::to_string(s) + "-subsets");
  }
  if (options.kernel && (!(options.kernel->field() == family.field()) ||
                         options.kernel->ambient_dim() != family.ambient_dim())) {
    throw std::invalid_argument("kernel constraint lives in a different ambient space");
  }
  const BigInt total = binomial(family.size(), s);
  if (total > options.max_subsets) {
    throw LimitExceeded("C(" + std::to_string(family.size()) + ", " + std::to_string(s) + ") = " + total.str() +
                        " subsets exceeds the cap of " + std::to_string(options.max_subsets));
  }

  const Search search(family, s, mode, options);
  const std::size_t last_first = family.size() - s;

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_first{std::numeric_limits<std::size_t>::max()};
  std::mutex found_mutex;
  std::vector<std::vector<std::size_t>> found;

  auto worker = [&] {
    while (true) {
      const std::size_t c0 = next.fetch_add(1);
      if (c0 > last_first || c0 > best_first.load()) return;
      if (auto t = search.search_from(c0)) {
        std::size_t cur = best_first.load();
        while (c0 < cur && !best_first.compare_exchange_weak(cur, c0)) {
        }
        std::lock_guard lock(found_mutex);
        found.push_back(std::move(*t));
        return;
      }
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }

  FreenessCertificate cert{mode, s, std::nullopt, 0, options.kernel};
  if (found.empty()) {
    cert.subsets_examined = to_u64(total);
  } else {
    const auto& best = *std::min_element(found.begin(), found.end());
    cert.witness = search.make_witness(best);
    cert.subsets_examined = lex_rank(best, family.size()) + 1;
  }
  return cert;
}

bool validate_witness(const ConstantDimensionFamily& family, const SunflowerWitness& witness) {
  const auto& idx = witness.indices;
  if (idx.size() < 3) return false;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= family.size()) return false;
    if (i > 0 && idx[i] <= idx[i - 1]) return false;
  }
  std::vector<Subspace> members;
  for (auto i : idx) members.push_back(family[i]);
  const GpReport report = is_gp_sunflower(members);
  if (!report.kernel || !(*report.kernel == witness.kernel)) return false;
  if (!(report.dims == witness.dims)) return false;
  return witness.kind == SunflowerKind::set_like || report.is_sunflower;
}

BigInt q_integer(std::uint64_t q, std::uint64_t m) {
  BigInt r = 0;
  for (std::uint64_t i = 0; i < m; ++i) r += big_pow(q, i);
  return r;
}

BigInt erdos_rado_bound_q(std::uint64_t q, std::uint64_t k, std::uint64_t s) {
  if (s < 3) throw std::invalid_argument("bound needs s >= 3");
  if (k < 1) throw std::invalid_argument("bound needs k >= 1");
  if (q < 2) throw std::invalid_argument("bound needs q >= 2");
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r *= q_integer(q, i * (s - 1));
  return r;
}

ThreeImpliesSReport three_implies_s(const ConstantDimensionFamily& family, std::size_t s,
                                    const VerifyOptions& options) {
  if (s < 3) throw std::invalid_argument("sunflower size s must be >= 3");
  ThreeImpliesSReport report{s, verify_free(family, 3, SunflowerKind::set_like, options), std::nullopt, false,
                             true, {}};
  report.vacuous = !report.three.is_free();
  if (family.size() < s) {
    report.note = "family has fewer than s members; s-check skipped";
  } else {
    report.at_s = verify_free(family, s, SunflowerKind::set_like, options);
    report.consistent = report.vacuous || report.at_s->is_free();
  }
  if (report.vacuous) {
    if (!report.note.empty()) report.note += "; ";
    report.note += "3-check found a witness, implication is vacuous";
  } else if (report.at_s) {
    report.note = report.consistent ? "3-free and s-free, as implied" : "3-free but an s-sunflower exists";
  }
  return report;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace qsun
