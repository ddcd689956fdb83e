#pragma once

#include <atomic>
#include <cstddef>
#include <memory>

#include "germlab/errors.hpp"

namespace germlab {

// Cooperative cancellation flag shared between a caller and long computations.
class CancelToken {
public:
    CancelToken() : flag_(std::make_shared<std::atomic<bool>>(false)) {}
    void cancel() const noexcept { flag_->store(true); }
    bool cancelled() const noexcept { return flag_->load(std::memory_order_relaxed); }

private:
    std::shared_ptr<std::atomic<bool>> flag_;
};

// Resource guards for basis computations. Exceeding a guard raises
// ResourceError; results are never truncated.
struct Limits {
    int max_degree = 64;
    std::size_t max_basis = 10000;
    CancelToken cancel;

    void check_cancel() const {
        if (cancel.cancelled()) throw ResourceError("computation cancelled");
    }
};

}  // namespace germlab
