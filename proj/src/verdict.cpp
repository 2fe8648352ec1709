#include "curvlab/verdict.hpp"

#include <stdexcept>

namespace curvlab {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::refused: return "refused";
    case Status::inapplicable: return "inapplicable";
    case Status::fault: return "fault";
  }
  return "fault";
}

Status status_from_string(const std::string& s) {
  for (Status v : {Status::pass, Status::fail, Status::refused, Status::inapplicable, Status::fault})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown status '" + s + "'");
}

}  // namespace curvlab
