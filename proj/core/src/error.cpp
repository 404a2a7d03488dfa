#include "ybdeform/error.hpp"

#include <sstream>

namespace ybdeform {

namespace {

std::string format_axiom_message(const std::string& axiom,
                                 const std::vector<int>& witness) {
  std::ostringstream out;
  out << "axiom '" << axiom << "' failed";
  if (!witness.empty()) {
    out << " at (";
    for (size_t i = 0; i < witness.size(); ++i) {
      if (i > 0) out << ", ";
      out << witness[i];
    }
    out << ")";
  }
  return out.str();
}

}  // namespace

AxiomError::AxiomError(const std::string& axiom,
                       const std::vector<int>& witness)
    : Error(format_axiom_message(axiom, witness)),
      axiom_(axiom),
      witness_(witness) {}

}  // namespace ybdeform
