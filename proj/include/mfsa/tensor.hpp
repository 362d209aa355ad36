#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfsa {

// Dense row-major tensor, last dimension fastest.
template <class T>
struct Tensor {
  std::vector<int> shape;
  std::vector<T> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s, T fill = T(0)) : shape(std::move(s)) {
    data.assign(static_cast<size_t>(count(shape)), fill);
  }

  static int64_t count(const std::vector<int>& s) {
    int64_t n = 1;
    for (int d : s) {
      if (d <= 0) throw std::invalid_argument("tensor dimensions must be positive, got " + dims_str(s));
      n *= d;
    }
    return n;
  }

  static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s), T(0)); }
  static Tensor full(std::vector<int> s, T v) { return Tensor(std::move(s), v); }

  static Tensor from_data(std::vector<int> s, std::vector<T> d) {
    Tensor t;
    if (count(s) != static_cast<int64_t>(d.size()))
      throw std::invalid_argument("tensor data length " + std::to_string(d.size()) +
                                  " does not match shape " + dims_str(s));
    t.shape = std::move(s);
    t.data = std::move(d);
    return t;
  }

  static Tensor identity(int n) {
    Tensor t({n, n}, T(0));
    for (int i = 0; i < n; ++i) t.data[static_cast<size_t>(i) * n + i] = T(1);
    return t;
  }

  int64_t numel() const { return static_cast<int64_t>(data.size()); }
  int rank() const { return static_cast<int>(shape.size()); }
  int dim(int i) const { return shape[static_cast<size_t>(i)]; }

  // Flat offset helpers for the common ranks.
  T& operator()(int i) { return data[static_cast<size_t>(i)]; }
  T operator()(int i) const { return data[static_cast<size_t>(i)]; }
  T& operator()(int i, int j) { return data[static_cast<size_t>(i) * shape[1] + j]; }
  T operator()(int i, int j) const { return data[static_cast<size_t>(i) * shape[1] + j]; }
  T& operator()(int i, int j, int k) {
    return data[(static_cast<size_t>(i) * shape[1] + j) * shape[2] + k];
  }
  T operator()(int i, int j, int k) const {
    return data[(static_cast<size_t>(i) * shape[1] + j) * shape[2] + k];
  }
  T& operator()(int n, int c, int h, int w) {
    return data[((static_cast<size_t>(n) * shape[1] + c) * shape[2] + h) * shape[3] + w];
  }
  T operator()(int n, int c, int h, int w) const {
    return data[((static_cast<size_t>(n) * shape[1] + c) * shape[2] + h) * shape[3] + w];
  }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  std::string shape_str() const { return dims_str(shape); }

  static std::string dims_str(const std::vector<int>& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "]";
    return os.str();
  }
};

template <class T>
inline bool all_finite(const Tensor<T>& t) {
  for (T v : t.data)
    if (!std::isfinite(v)) return false;
  return true;
}

template <class T>
inline void require_finite(const Tensor<T>& t, const char* op) {
  if (!all_finite(t))
    throw std::runtime_error(std::string("non-finite value produced by op '") + op + "'");
}

template <class T>
inline void require_same_shape(const Tensor<T>& a, const Tensor<T>& b, const char* op) {
  if (!a.same_shape(b))
    throw std::invalid_argument(std::string(op) + ": shape mismatch " + a.shape_str() + " vs " +
                                b.shape_str());
}

}  // namespace mfsa
