#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "kanseg/errors.hpp"

namespace kanseg {

namespace detail {

struct TensorImpl {
    std::vector<int> shape;
    std::vector<double> data;
    std::vector<double> grad; // empty until backward touches this tensor
    bool requires_grad = false;
};

} // namespace detail

std::int64_t shape_product(const std::vector<int>& shape);
std::string shape_string(const std::vector<int>& shape);

/// Shared-storage handle to an n-dimensional double array. Copies alias the
/// same storage, which is what lets the tape accumulate gradients into the
/// tensors an op actually consumed.
class Tensor {
public:
    Tensor() = default;

    static Tensor zeros(std::vector<int> shape, bool requires_grad = false);
    static Tensor full(std::vector<int> shape, double value, bool requires_grad = false);
    static Tensor from(std::vector<int> shape, std::vector<double> data, bool requires_grad = false);
    static Tensor scalar(double value, bool requires_grad = false);

    bool defined() const { return impl_ != nullptr; }
    const std::vector<int>& shape() const { return impl_->shape; }
    int dim(int axis) const { return impl_->shape[static_cast<std::size_t>(axis)]; }
    int ndim() const { return static_cast<int>(impl_->shape.size()); }
    std::int64_t size() const { return static_cast<std::int64_t>(impl_->data.size()); }

    std::span<const double> values() const { return impl_->data; }
    std::span<double> mutable_values() { return impl_->data; }
    double value_at(std::int64_t i) const { return impl_->data[static_cast<std::size_t>(i)]; }

    /// Value of a 1-element tensor.
    double item() const;

    bool requires_grad() const { return impl_->requires_grad; }
    void set_requires_grad(bool v) { impl_->requires_grad = v; }

    bool has_grad() const { return !impl_->grad.empty(); }
    std::span<const double> grad() const { return impl_->grad; }
    void clear_grad() { impl_->grad.clear(); }

    /// Fresh storage, identical values, no grad, requires_grad off.
    Tensor detached_copy() const;

    detail::TensorImpl* impl() const { return impl_.get(); }
    std::shared_ptr<detail::TensorImpl> impl_ptr() const { return impl_; }

private:
    explicit Tensor(std::shared_ptr<detail::TensorImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<detail::TensorImpl> impl_;
};

/// Records one backward step per forward op, in execution order. Backward
/// replays the list in reverse, so inputs always receive their gradients
/// after every consumer has contributed.
class Tape {
public:
    void record(std::function<void()> backward_step) {
        ops_.emplace_back(std::move(backward_step));
    }

    /// Reverse-mode sweep from a 1-element output. One sweep per tape;
    /// reset() re-arms it.
    void backward(const Tensor& scalar_output);

    void reset() {
        ops_.clear();
        consumed_ = false;
    }

    bool consumed() const { return consumed_; }
    std::size_t op_count() const { return ops_.size(); }

private:
    std::vector<std::function<void()>> ops_;
    bool consumed_ = false;
};

namespace detail {

inline std::vector<double>& ensure_grad(TensorImpl* t) {
    if (t->grad.empty()) t->grad.assign(t->data.size(), 0.0);
    return t->grad;
}

} // namespace detail

/// Throws NumericalError if any value is NaN/Inf. Called after every forward op.
void check_finite(const char* op_name, const Tensor& t);

} // namespace kanseg
