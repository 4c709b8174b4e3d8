#ifndef QCMP_IO_HPP
#define QCMP_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qcmp/nogo.hpp"
#include "qcmp/povm.hpp"
#include "qcmp/states.hpp"

namespace qcmp {

/// 17-significant-digit decimal rendering (round-trips a double exactly).
std::string fmt17(double x);

// Ensemble text format: line 1 "n d"; then n lines of 2d reals, re/im
// interleaved. Lines starting with '#' are comments.
StateEnsemble read_ensemble(std::istream& in);
StateEnsemble read_ensemble_file(const std::string& path);
void write_ensemble(std::ostream& out, const StateEnsemble& e);

// Operator text format: line 1 "n d"; then D rows of 2D reals (row-major,
// re/im interleaved). A file may hold several operators; a "# label NAME"
// comment before a block names the element.
std::vector<std::pair<std::string, CompositeOperator>>
read_operators(std::istream& in);
std::vector<std::pair<std::string, CompositeOperator>>
read_operators_file(const std::string& path);
void write_operator(std::ostream& out, const CompositeOperator& op,
                    const std::string& label = "");

std::string certificate_csv(const SpanningCertificate& cert, std::uint64_t seed);
std::string decay_csv(const DecayCurve& curve);
std::string validation_csv(const PovmValidation& report);

/// Atomic write: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace qcmp

#endif
