#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iterator>
#include <mutex>
#include <optional>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "spinoza/rng.hpp"
#include "spinoza/verify.hpp"

namespace spinoza {

// Enumeration order over the 2^n sign vectors: lexicographic with plus
// before minus, position 1 most significant. Index 0 is all-plus, index
// 2^n - 1 all-minus. Exhaustive scans are capped at n = 62 so indices fit
// an unsigned 64-bit counter.
inline constexpr std::size_t kMaxScanBits = 62;

inline void check_scan_width(std::size_t n) {
  if (n < 1 || n > kMaxScanBits) {
    throw std::invalid_argument("assignment scan needs 1 <= n <= " +
                                std::to_string(kMaxScanBits) + ", got " +
                                std::to_string(n));
  }
}

/// Sign vector at the given enumeration index.
inline SignVector sign_vector_at(std::size_t n, std::uint64_t index) {
  check_scan_width(n);
  std::vector<Sign> signs(n, Sign::plus);
  for (std::size_t i = 0; i < n; ++i) {
    if ((index >> (n - 1 - i)) & 1u) signs[i] = Sign::minus;
  }
  return SignVector(std::move(signs));
}

/// Lexicographic successor, flipping from the last position with carry.
/// Returns false after wrapping past the all-minus vector.
inline bool advance_signs(std::vector<Sign>& signs) {
  for (std::size_t i = signs.size(); i-- > 0;) {
    if (signs[i] == Sign::plus) {
      signs[i] = Sign::minus;
      return true;
    }
    signs[i] = Sign::plus;
  }
  return false;
}

/// Lazy stream over all 2^n sign vectors in enumeration order.
class AssignmentRange {
 public:
  class iterator {
   public:
    using value_type = SignVector;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(std::size_t n, std::uint64_t index) : n_(n), index_(index) {}

    SignVector operator*() const { return sign_vector_at(n_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++index_;
      return copy;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    std::size_t n_;
    std::uint64_t index_;
  };

  explicit AssignmentRange(std::size_t n) : n_(n) { check_scan_width(n); }

  iterator begin() const { return iterator(n_, 0); }
  iterator end() const { return iterator(n_, size()); }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

 private:
  std::size_t n_;
};

inline AssignmentRange enumerate_assignments(std::size_t n) {
  return AssignmentRange(n);
}

enum class Answer { yes, no, aborted };

inline std::string_view answer_name(Answer answer) {
  switch (answer) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::aborted: return "aborted";
  }
  return "?";
}

inline Answer answer_from_name(std::string_view name) {
  if (name == "yes") return Answer::yes;
  if (name == "no") return Answer::no;
  if (name == "aborted") return Answer::aborted;
  throw std::invalid_argument("unknown answer '" + std::string(name) + "'");
}

/// Outcome of an exhaustive solve. A yes carries the enumeration-minimal
/// witness; a no means every assignment was tried; aborted means the
/// assignment budget ran out first.
struct Verdict {
  Answer answer = Answer::no;
  std::optional<SignVector> witness;
  std::uint64_t assignments_tried = 0;
  std::chrono::nanoseconds elapsed{0};
  OpCounters total_counters;
};

struct SolveOptions {
  unsigned workers = 1;
  /// Cap on assignments checked; 0 means no cap. Hitting the cap before the
  /// scan is complete yields Answer::aborted, never a spurious no.
  std::uint64_t max_assignments = 0;
};

namespace detail {

// Scans [begin, end) in order, verifying each assignment. Stops early when a
// witness at a lower index is already known, when its own block yields one,
// or when the shared ticket budget runs out (budget_hit set in that case).
inline void scan_block(const Instance& inst, std::size_t n, std::uint64_t begin,
                       std::uint64_t end, std::atomic<std::uint64_t>& best,
                       std::atomic<std::uint64_t>& tickets, std::uint64_t budget,
                       std::atomic<bool>& budget_hit, OpCounters& counters,
                       std::uint64_t& tried) {
  std::vector<Sign> current = sign_vector_at(n, begin).signs();
  for (std::uint64_t index = begin; index < end; ++index) {
    if (best.load(std::memory_order_relaxed) < begin) return;
    const std::uint64_t ticket = tickets.fetch_add(1, std::memory_order_relaxed);
    if (ticket >= budget) {
      tickets.fetch_sub(1, std::memory_order_relaxed);
      budget_hit.store(true, std::memory_order_relaxed);
      return;
    }
    const VerifyReport report = verify(inst, SignVector(current));
    counters += report.counters;
    ++tried;
    if (report.satisfied) {
      std::uint64_t seen = best.load(std::memory_order_relaxed);
      while (index < seen &&
             !best.compare_exchange_weak(seen, index, std::memory_order_relaxed)) {
      }
      return;  // later indices in this block cannot beat this witness
    }
    advance_signs(current);
  }
}

}  // namespace detail

/// Exhaustive scan over all 2^n sign vectors. The space is split into
/// contiguous blocks by the leading sign bits; workers claim blocks in order
/// and share only the running minimum witness index, so the (answer, witness)
/// pair is identical for every worker count. Early exit on yes is allowed;
/// a no always means assignments_tried == 2^n.
inline Verdict solve(const Instance& inst, const SolveOptions& options = {}) {
  const std::size_t n = inst.n();
  check_scan_width(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t budget =
      options.max_assignments == 0 ? total : options.max_assignments;
  const unsigned workers = std::max(1u, options.workers);

  const auto start_time = std::chrono::steady_clock::now();

  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::atomic<std::uint64_t> tickets{0};
  std::atomic<bool> budget_hit{false};

  Verdict verdict;
  if (workers == 1) {
    detail::scan_block(inst, n, 0, total, best, tickets, budget, budget_hit,
                       verdict.total_counters, verdict.assignments_tried);
  } else {
    std::uint64_t num_blocks = 1;
    while (num_blocks < workers) num_blocks <<= 1;
    num_blocks = std::min<std::uint64_t>(num_blocks, total);
    const std::uint64_t block_size = total / num_blocks;

    std::atomic<std::uint64_t> next_block{0};
    std::mutex merge_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        OpCounters local_counters;
        std::uint64_t local_tried = 0;
        for (;;) {
          const std::uint64_t block = next_block.fetch_add(1);
          if (block >= num_blocks) break;
          const std::uint64_t begin = block * block_size;
          if (best.load(std::memory_order_relaxed) < begin) break;
          detail::scan_block(inst, n, begin, begin + block_size, best, tickets,
                             budget, budget_hit, local_counters, local_tried);
        }
        const std::lock_guard<std::mutex> lock(merge_mutex);
        verdict.total_counters += local_counters;
        verdict.assignments_tried += local_tried;
      });
    }
    for (auto& t : pool) t.join();
  }

  verdict.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start_time);

  const std::uint64_t found = best.load();
  if (found != UINT64_MAX && (workers == 1 || !budget_hit.load())) {
    verdict.answer = Answer::yes;
    verdict.witness = sign_vector_at(n, found);
  } else if (budget_hit.load()) {
    verdict.answer = Answer::aborted;
  } else {
    verdict.answer = Answer::no;
  }
  return verdict;
}

/// Verdict as key=value lines (witness omitted unless present).
inline std::string render_verdict(const Verdict& verdict, const MagnitudeTuple& c) {
  std::string out;
  out += "answer=";
  out += answer_name(verdict.answer);
  out += '\n';
  if (verdict.witness.has_value()) {
    out += "witness=" + serialize_witness(*verdict.witness, c) + '\n';
  }
  out += "assignments_tried=" + std::to_string(verdict.assignments_tried);
  out += "\nelapsed_ns=" + std::to_string(verdict.elapsed.count());
  out += "\nmod_ops=" + std::to_string(verdict.total_counters.modulo);
  out += "\nmul_ops=" + std::to_string(verdict.total_counters.multiplications);
  out += "\nadd_ops=" + std::to_string(verdict.total_counters.additions);
  out += "\nstring_ops=" + std::to_string(verdict.total_counters.string_ops);
  out += '\n';
  return out;
}

/// Result of sampling assignments at random instead of scanning.
struct GuessResult {
  std::optional<SignVector> witness;
  std::uint64_t tries = 0;
};

/// Draws sign vectors uniformly with replacement (indices from the seeded
/// xorshift64* stream) and checks each one; stops at the first satisfying
/// draw or when the budget runs out. The draw sequence is a pure function of
/// the seed; on_draw sees every drawn index.
template <typename OnDraw>
GuessResult guess_check(const Instance& inst, std::uint64_t seed,
                        std::uint64_t max_tries, OnDraw&& on_draw) {
  const std::size_t n = inst.n();
  check_scan_width(n);
  if (max_tries == 0) {
    throw std::invalid_argument("guess_check needs max_tries >= 1");
  }
  Xorshift64Star rng(seed);
  const std::uint64_t space = std::uint64_t{1} << n;
  for (std::uint64_t t = 1; t <= max_tries; ++t) {
    const std::uint64_t index = rng.bounded(space);
    on_draw(index);
    SignVector signs = sign_vector_at(n, index);
    if (verify(inst, signs).satisfied) {
      return GuessResult{std::move(signs), t};
    }
  }
  return GuessResult{std::nullopt, max_tries};
}

inline GuessResult guess_check(const Instance& inst, std::uint64_t seed,
                               std::uint64_t max_tries) {
  return guess_check(inst, seed, max_tries, [](std::uint64_t) {});
}

}  // namespace spinoza
