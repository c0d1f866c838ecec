#include "cipherclimb/rng.hpp"

namespace cipherclimb {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept
{
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) noexcept
{
    for (int round = 0; round < 10; ++round) {
        if (round != 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

WorkerRngState::WorkerRngState(std::uint64_t global_seed, std::uint32_t worker_index, std::uint32_t restart) noexcept
    : key_{static_cast<std::uint32_t>(global_seed), static_cast<std::uint32_t>(global_seed >> 32)},
      worker_(worker_index),
      restart_(restart)
{
}

void WorkerRngState::refill() noexcept
{
    buffer_ = philox4x32({static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32), worker_, restart_},
                         key_);
    ++block_;
    used_ = 0;
}

std::uint64_t WorkerRngState::next_u64() noexcept
{
    if (used_ >= 4) {
        refill();
    }
    const std::uint64_t lo = buffer_[used_];
    const std::uint64_t hi = buffer_[used_ + 1];
    used_ += 2;
    ++draws_;
    return (hi << 32) | lo;
}

double WorkerRngState::next_uniform() noexcept
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t WorkerRngState::next_int_below(std::size_t bound) noexcept
{
    return scale_uniform(next_uniform(), bound);
}

std::pair<std::size_t, std::size_t> WorkerRngState::next_distinct_pair(std::size_t bound) noexcept
{
    const std::size_t a = next_int_below(bound);
    std::size_t b = next_int_below(bound);
    while (b == a) {
        b = next_int_below(bound);
    }
    return {a, b};
}

}  // namespace cipherclimb
