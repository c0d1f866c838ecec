#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>

namespace cipherclimb {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key) noexcept;

/// Worker index reserved for host-side draws (the deterministic MAS letter picks).
inline constexpr std::uint32_t kHostStream = 0xFFFFFFFFu;

/// Worker index reserved for random key generation in the command-line tools.
inline constexpr std::uint32_t kKeygenStream = 0xFFFFFFFEu;

/// Per-worker random stream.
///
/// The stream is Philox keyed by the global seed; the 128-bit counter is laid out as
/// (block low, block high, worker index, restart index). Streams for different
/// (worker, restart) pairs therefore occupy disjoint counter ranges and never overlap,
/// and every draw is a pure function of (seed, worker, restart, draw number), so
/// results do not depend on which thread runs a worker.
class WorkerRngState {
  public:
    WorkerRngState(std::uint64_t global_seed, std::uint32_t worker_index, std::uint32_t restart = 0) noexcept;

    std::uint64_t next_u64() noexcept;

    /// Uniform in [0, 1) with 53 bits of resolution.
    double next_uniform() noexcept;

    /// floor(u * bound) for u = next_uniform(); bound must be >= 1.
    std::size_t next_int_below(std::size_t bound) noexcept;

    /// Two distinct values in [0, bound); the second is redrawn while equal to the first.
    /// bound must be >= 2.
    std::pair<std::size_t, std::size_t> next_distinct_pair(std::size_t bound) noexcept;

    std::uint64_t draws() const noexcept { return draws_; }

    friend bool operator==(const WorkerRngState&, const WorkerRngState&) = default;

  private:
    void refill() noexcept;

    std::array<std::uint32_t, 2> key_;
    std::uint32_t worker_;
    std::uint32_t restart_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    unsigned used_ = 4;
    std::uint64_t draws_ = 0;
};

inline WorkerRngState init_worker_state(std::uint64_t global_seed, std::uint32_t worker_index,
                                        std::uint32_t restart = 0) noexcept
{
    return WorkerRngState(global_seed, worker_index, restart);
}

/// floor(u * bound), the conversion next_int_below applies to a uniform draw.
inline std::size_t scale_uniform(double u, std::size_t bound) noexcept
{
    return static_cast<std::size_t>(u * static_cast<double>(bound));
}

}  // namespace cipherclimb
