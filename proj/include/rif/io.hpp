#ifndef RIF_IO_HPP
#define RIF_IO_HPP

#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "rif/calculus.hpp"
#include "rif/frame.hpp"
#include "rif/semantics.hpp"
#include "rif/standard.hpp"

// JSON is used for every structured file: frames, valuations, countermodels,
// derivations. Keys are order-insensitive; loaders re-validate everything
// they read. Anything written here can be read back bit-compatibly.

namespace rif {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Content that parses but fails a law check: a loaded valuation image that
// is not a proper filter, or a frame offered where a validated one is
// required. Distinct from IoError/FrameError so callers can exit apart.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// {"states": [...], "e": ..., "i": ..., "meet": [[a,b,m],...], "star": {...}}
// A loader also accepts "hasse": [[a,b],...] in place of "meet".
nlohmann::json frame_to_json(const RoutleyFrame& frame);
RoutleyFrame frame_from_json(const nlohmann::json& j);

// Builtin names resolve before file paths.
RoutleyFrame load_frame(const std::string& name_or_path);

std::string describe(const RoutleyFrame& frame, const FrameViolation& v);
nlohmann::json violations_to_json(const RoutleyFrame& frame,
                                  const std::vector<FrameViolation>& vs);

// {"p": ["v","i"], ...}; loading verifies the proper-filter law per atom.
nlohmann::json valuation_to_json(const RoutleyFrame& frame, const Valuation& val);
Valuation valuation_from_json(const RoutleyFrame& frame, const nlohmann::json& j);
Valuation load_valuation(const RoutleyFrame& frame, const std::string& path);

nlohmann::json countermodel_to_json(const Countermodel& cm);

// {"states": [...], "order": [[below,above],...], "star": {...}}
nlohmann::json standard_frame_to_json(const StandardFrame& frame);
StandardFrame standard_frame_from_json(const nlohmann::json& j);

// One node per line: "<pair>  [<justification>]", premises indented two
// spaces under their rule. Axiom justifications carry k and the
// substitution: "[L2; k=0; alpha := p; beta := q]".
std::string derivation_to_text(const Derivation& d);
Derivation derivation_from_text(const std::string& text);

nlohmann::json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);  // throws IoError

}  // namespace rif

#endif  // RIF_IO_HPP
