/**
 * Counting and enumerating crossed complex morphisms from the fundamental
 * crossed complex of a presented CW-complex into a finite crossed complex.
 *
 * The search is layered by dimension. Layer 1 ranges over all of A_1 for
 * every 1-cell; at layer n >= 2 each n-cell may only take values in the
 * d_n-fiber over the evaluation of its attaching element. Every (n+1)-cell
 * is checked as soon as the last n-cell it mentions has been coloured: a
 * target with an empty fiber prunes the branch, and for n = L the target
 * must be the identity (an (L+1)-cell kills its attaching element after
 * cotruncation). Cells above dimension L+1 impose nothing.
 */
#ifndef XCOMPLEX_ENUMERATE_HPP
#define XCOMPLEX_ENUMERATE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "xcomplex/crossed_complex.hpp"
#include "xcomplex/evaluate.hpp"
#include "xcomplex/presentation.hpp"
#include "xcomplex/rational.hpp"

namespace xcomplex {

inline constexpr std::uint64_t default_enumeration_cap = 1'000'000;
inline constexpr std::uint64_t default_bruteforce_cap = 10'000'000;

struct SearchOptions {
  unsigned threads = 1;
  /// Maximum number of morphisms materialized by enumerate_homs.
  std::uint64_t cap = default_enumeration_cap;
  /// Record attaching elements of cells of dimension >= 3 whose boundary in
  /// the coefficient complex is not the identity (an invalid presentation).
  bool check_boundary_squares = false;
};

struct CountResult {
  BigInt count;
  std::uint64_t boundary_square_defects = 0;
};

namespace detail {

/// Adds small counts in a machine word and spills into a BigInt on overflow.
class CountAccumulator {
 public:
  void add(std::uint64_t v) {
    std::uint64_t sum = 0;
    if (__builtin_add_overflow(small_, v, &sum)) {
      big_ += small_;
      small_ = v;
    } else {
      small_ = sum;
    }
  }
  void add(const BigInt& v) { big_ += v; }
  BigInt total() const { return big_ + BigInt(small_); }

 private:
  std::uint64_t small_ = 0;
  BigInt big_;
};

class HomSearch {
 public:
  HomSearch(const CWPresentation& p, const FiniteCrossedComplex& c, bool check_squares)
      : p_(p), c_(c), L_(c.length()), check_squares_(check_squares) {
    require_valid(p);
    layers_.resize(L_ + 1);
    for (std::size_t n = 1; n <= L_; ++n) {
      auto& layer = layers_[n];
      layer.cells = p.count(n);
      layer.ready.assign(layer.cells, {});
      for (CellIndex cell = 0; cell < p.count(n + 1); ++cell) {
        const long last = last_generator(n + 1, cell);
        if (last < 0) {
          layer.ready_at_start.push_back(cell);
        } else {
          layer.ready[static_cast<std::size_t>(last)].push_back(cell);
        }
      }
    }
    kill_cells_ = p.count(L_ + 1) > 0;
  }

  std::size_t layer1_cells() const { return layers_[1].cells; }
  std::size_t order1() const { return c_.group(1).order(); }

  struct Worker {
    const HomSearch& search;
    std::vector<std::vector<Elem>> f;
    std::vector<std::vector<Elem>> target;  // target[n] for n-cells, 2 <= n <= L + 1
    std::vector<Elem> prefix;
    bool counting = true;
    CountAccumulator acc;
    std::vector<Morphism>* out = nullptr;
    std::atomic<std::uint64_t>* emitted = nullptr;
    std::uint64_t cap = 0;
    std::atomic<bool>* abort = nullptr;
    std::uint64_t defects = 0;

    explicit Worker(const HomSearch& s) : search(s) {
      const std::size_t L = s.L_;
      f.resize(L);
      for (std::size_t n = 1; n <= L; ++n) f[n - 1].assign(s.p_.count(n), 0);
      target.resize(L + 2);
      for (std::size_t n = 2; n <= L + 1; ++n) target[n].assign(s.p_.count(n), 0);
    }

    void run() { start_layer(1); }

    bool check(std::size_t n, const std::vector<CellIndex>& cells) {
      const auto& c = search.c_;
      for (CellIndex cell : cells) {
        const Elem t = eval_attach(search.p_, c, f, n + 1, cell);
        target[n + 1][cell] = t;
        if (search.check_squares_ && n >= 2 && c.boundary(n)(t) != FiniteGroup::identity) ++defects;
        if (n == search.L_) {
          if (t != FiniteGroup::identity) return false;
        } else if (c.fibers(n + 1)[t].empty()) {
          return false;
        }
      }
      return true;
    }

    void start_layer(std::size_t n) {
      const auto& layer = search.layers_[n];
      if (!check(n, layer.ready_at_start)) return;
      if (counting && n == search.L_ && !search.kill_cells_) {
        multiply_out(n);
        return;
      }
      descend(n, 0);
    }

    void multiply_out(std::size_t n) {
      std::uint64_t product = 1;
      BigInt big;
      bool overflowed = false;
      for (std::size_t i = 0; i < search.layers_[n].cells; ++i) {
        const std::uint64_t size = domain_size(n, i);
        if (size == 0) return;
        if (overflowed) {
          big *= size;
        } else if (__builtin_mul_overflow(product, size, &product)) {
          overflowed = true;
          big = BigInt(product_before_overflow(n, i)) * size;
        }
      }
      if (overflowed) {
        acc.add(big);
      } else {
        acc.add(product);
      }
    }

    std::uint64_t product_before_overflow(std::size_t n, std::size_t upto) const {
      std::uint64_t product = 1;
      for (std::size_t i = 0; i < upto; ++i) product *= domain_size(n, i);
      return product;
    }

    std::uint64_t domain_size(std::size_t n, std::size_t i) const {
      if (n == 1) return i < prefix.size() ? 1 : search.order1();
      return search.c_.fibers(n)[target[n][i]].size();
    }

    void descend(std::size_t n, std::size_t i) {
      if (abort != nullptr && abort->load(std::memory_order_relaxed)) return;
      const auto& layer = search.layers_[n];
      if (i == layer.cells) {
        if (n == search.L_) {
          leaf();
        } else {
          start_layer(n + 1);
        }
        return;
      }
      auto& slot = f[n - 1][i];
      if (n == 1) {
        if (i < prefix.size()) {
          slot = prefix[i];
          if (check(1, layer.ready[i])) descend(1, i + 1);
          return;
        }
        const auto order = static_cast<Elem>(search.order1());
        for (Elem v = 0; v < order; ++v) {
          slot = v;
          if (check(1, layer.ready[i])) descend(1, i + 1);
        }
        return;
      }
      for (Elem v : search.c_.fibers(n)[target[n][i]]) {
        slot = v;
        if (check(n, layer.ready[i])) descend(n, i + 1);
      }
    }

    void leaf() {
      if (counting) {
        acc.add(std::uint64_t{1});
        return;
      }
      if (emitted->fetch_add(1, std::memory_order_relaxed) >= cap) {
        abort->store(true, std::memory_order_relaxed);
        return;
      }
      out->push_back(Morphism{f});
    }
  };

  /// Layer-1 prefixes used to split work between threads; task k fixes the
  /// first `len` 1-cells to the base-|A_1| digits of k, most significant first,
  /// so concatenating task outputs in index order preserves lexicographic order.
  std::size_t prefix_length(unsigned threads) const {
    if (threads <= 1) return 0;
    std::size_t len = 0;
    std::uint64_t tasks = 1;
    while (len < layer1_cells() && tasks < 16ULL * threads) {
      tasks *= order1();
      ++len;
      if (order1() <= 1) break;
    }
    return len;
  }

  std::vector<Elem> decode_prefix(std::uint64_t task, std::size_t len) const {
    std::vector<Elem> prefix(len);
    for (std::size_t i = len; i-- > 0;) {
      prefix[i] = static_cast<Elem>(task % order1());
      task /= order1();
    }
    return prefix;
  }

  template <typename TaskFn>
  static void run_tasks(std::uint64_t task_count, unsigned threads, TaskFn&& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(
                                                           std::min<std::uint64_t>(task_count, 1024))));
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
      try {
        for (std::uint64_t k = next++; k < task_count; k = next++) fn(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    if (threads == 1) {
      body();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body);
      for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
  }

  CountResult count(unsigned threads) const {
    const std::size_t len = prefix_length(threads);
    std::uint64_t tasks = 1;
    for (std::size_t i = 0; i < len; ++i) tasks *= order1();
    std::vector<BigInt> partial(tasks);
    std::vector<std::uint64_t> defects(tasks, 0);
    run_tasks(tasks, threads, [&](std::uint64_t k) {
      Worker w(*this);
      w.prefix = decode_prefix(k, len);
      w.run();
      partial[k] = w.acc.total();
      defects[k] = w.defects;
    });
    CountResult result;
    for (std::uint64_t k = 0; k < tasks; ++k) {
      result.count += partial[k];
      result.boundary_square_defects += defects[k];
    }
    return result;
  }

  std::vector<Morphism> enumerate(unsigned threads, std::uint64_t cap) const {
    const std::size_t len = prefix_length(threads);
    std::uint64_t tasks = 1;
    for (std::size_t i = 0; i < len; ++i) tasks *= order1();
    std::vector<std::vector<Morphism>> partial(tasks);
    std::atomic<std::uint64_t> emitted{0};
    std::atomic<bool> abort{false};
    run_tasks(tasks, threads, [&](std::uint64_t k) {
      Worker w(*this);
      w.prefix = decode_prefix(k, len);
      w.counting = false;
      w.out = &partial[k];
      w.emitted = &emitted;
      w.cap = cap;
      w.abort = &abort;
      w.run();
    });
    if (abort.load()) {
      throw Error(ErrorCode::ResultTooLarge,
                  "more than " + std::to_string(cap) + " morphisms; raise the cap");
    }
    std::vector<Morphism> all;
    all.reserve(emitted.load());
    for (auto& part : partial)
      for (auto& m : part) all.push_back(std::move(m));
    return all;
  }

 private:
  struct Layer {
    std::size_t cells = 0;
    /// ready[i]: (n+1)-cells whose last referenced n-cell is i
    std::vector<std::vector<CellIndex>> ready;
    /// (n+1)-cells that reference no n-cell
    std::vector<CellIndex> ready_at_start;
  };

  long last_generator(std::size_t dim, CellIndex cell) const {
    long last = -1;
    if (dim == 2) {
      for (const auto& l : p_.attach2[cell]) last = std::max(last, static_cast<long>(l.gen));
    } else if (dim == 3) {
      for (const auto& t : p_.attach3[cell]) last = std::max(last, static_cast<long>(t.gen));
    } else {
      for (const auto& t : p_.attach_module(dim)[cell]) last = std::max(last, static_cast<long>(t.gen));
    }
    return last;
  }

  const CWPresentation& p_;
  const FiniteCrossedComplex& c_;
  std::size_t L_;
  bool check_squares_;
  bool kill_cells_ = false;
  std::vector<Layer> layers_;
};

}  // namespace detail

inline CountResult count_homs_detailed(const CWPresentation& p, const FiniteCrossedComplex& c,
                                       const SearchOptions& options = {}) {
  detail::HomSearch search(p, c, options.check_boundary_squares);
  return search.count(options.threads);
}

/// Exact number of morphisms Pi(M) -> A.
inline BigInt count_homs(const CWPresentation& p, const FiniteCrossedComplex& c,
                         const SearchOptions& options = {}) {
  return count_homs_detailed(p, c, options).count;
}

/// All morphisms in lexicographic order, each re-verified. Throws
/// ResultTooLarge beyond options.cap.
inline std::vector<Morphism> enumerate_homs(const CWPresentation& p, const FiniteCrossedComplex& c,
                                            const SearchOptions& options = {}) {
  detail::HomSearch search(p, c, false);
  auto all = search.enumerate(options.threads, options.cap);
  for (const auto& f : all) {
    const auto defect = morphism_defect(p, c, f);
    if (!defect.empty()) throw Error(ErrorCode::InternalAssertion, "enumerated colouring: " + defect);
  }
  return all;
}

/// Oracle: tries every colouring of every cell of dimension 1..L and keeps
/// those satisfying all morphism conditions. Throws InstanceTooLarge when the
/// colouring space exceeds `cap`.
inline BigInt count_homs_bruteforce(const CWPresentation& p, const FiniteCrossedComplex& c,
                                    std::uint64_t cap = default_bruteforce_cap) {
  require_valid(p);
  const std::size_t L = c.length();
  BigInt space = 1;
  for (std::size_t n = 1; n <= L; ++n) space *= big_pow(c.group(n).order(), p.count(n));
  if (space > cap) {
    throw Error(ErrorCode::InstanceTooLarge, "colouring space " + space.str() + " exceeds " +
                                                 std::to_string(cap));
  }
  Morphism f;
  f.values.resize(L);
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (dimension, cell)
  for (std::size_t n = 1; n <= L; ++n) {
    f.values[n - 1].assign(p.count(n), 0);
    for (std::size_t i = 0; i < p.count(n); ++i) slots.emplace_back(n, i);
  }
  BigInt found = 0;
  while (true) {
    if (is_morphism(p, c, f)) ++found;
    std::size_t k = slots.size();
    while (k > 0) {
      const auto [n, i] = slots[k - 1];
      auto& v = f.values[n - 1][i];
      if (++v < c.group(n).order()) break;
      v = 0;
      --k;
    }
    if (k == 0) break;
  }
  return found;
}

}  // namespace xcomplex

#endif
