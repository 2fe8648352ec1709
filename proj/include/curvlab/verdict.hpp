#pragma once

#include <cmath>
#include <algorithm>
#include <string>
#include <utility>

#include "curvlab/chart.hpp"

namespace curvlab {

enum class Status { pass, fail, refused, inapplicable, fault };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// Outcome of a sampled check: the worst residual, where it occurred, and the
/// tolerance it was held to.
struct Verdict {
  std::string name;
  Status status = Status::pass;
  double max_residual = 0.0;
  Point4 argmax{};
  bool has_argmax = false;
  double tolerance = 0.0;
  std::string note;

  bool passed() const noexcept { return status == Status::pass; }
};

/// Running max over sample points visited in index order; ties keep the
/// earlier point. A NaN residual is sticky and marks the result as a fault.
class MaxTracker {
 public:
  void observe(double residual, const Point4& where) {
    if (std::isnan(residual)) {
      if (!nan_) {
        nan_ = true;
        argmax_ = where;
        has_argmax_ = true;
      }
      return;
    }
    if (!has_argmax_ || residual > max_) {
      if (!nan_) argmax_ = where;
      max_ = std::max(max_, residual);
      has_argmax_ = true;
    }
  }

  double max() const noexcept { return nan_ ? NAN : max_; }
  bool saw_nan() const noexcept { return nan_; }

  /// Pass when max < tol.
  Verdict verdict(std::string name, double tol) const {
    Verdict v;
    v.name = std::move(name);
    v.tolerance = tol;
    v.max_residual = max();
    v.argmax = argmax_;
    v.has_argmax = has_argmax_;
    if (nan_)
      v.status = Status::fault;
    else
      v.status = max_ < tol ? Status::pass : Status::fail;
    return v;
  }

 private:
  double max_ = 0.0;
  Point4 argmax_{};
  bool has_argmax_ = false;
  bool nan_ = false;
};

}  // namespace curvlab
