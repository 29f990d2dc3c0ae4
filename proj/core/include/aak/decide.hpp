#pragma once
#include <string>
#include <vector>

#include "aak/diagram.hpp"

namespace aak {

enum class Status { TRIVIAL, NONTRIVIAL };

enum class Reason {
    COILED_AFTER_R2,      // clasp branch removed everything: unknot
    NOT_COILED_AFTER_R2,  // clasp branch left a reduced alternating diagram
    NO_FLYPED_TONGUE,     // strongly reduced with no site: knotted
    REACHED_TRIVIAL,      // defensive: the loop emptied the diagram directly
};

enum class StepKind {
    R2_CLASP,
    R1_KINK,
    FLYPE,
    UNTONGUE,
    UNTWIRL,
    TONGUE,  // expansion moves never appear in decision certificates but
    TWIRL,   // share the record format (used by the generator)
};

// One rewrite along the reduction. `args` are the site integers in the
// step's text encoding order:
//   R2_CLASP c1 c2          (ascending crossing ids)
//   R1_KINK  c
//   FLYPE    x s e1c e1s e2c e2s   (cut edges by their smaller dart)
//   UNTONGUE delta slot
//   UNTWIRL  delta slot
//   TONGUE   delta slot
//   TWIRL    delta r wrap          (wrap: 0 = A, 1 = B)
struct Step {
    StepKind kind;
    std::vector<int> args;
    bool mirror = false;
    int n_after = 0;  // crossing count after the step
};

struct Verdict {
    Status status;
    Reason reason;
    std::vector<Step> steps;
    Diagram terminal;
};

// Throws input_error unless d is a planar, connected, reduced almost
// alternating knot diagram with a unique dealternator flag.
void validate_for_decide(const Diagram& d);

// The reduction loop. Throws input_error on invalid input and
// internal_error when a runtime law is violated (moves must preserve
// reducedness, the clasp branch must yield an alternating diagram, and a
// strongly reduced diagram with sites must always admit one move).
Verdict decide(const Diagram& d, int max_iter = 10000);

const char* status_name(Status s);    // "TRIVIAL" / "NONTRIVIAL"
const char* reason_name(Reason r);    // "COILED_AFTER_R2" ...
// CLI verdict line, e.g. "TRIVIAL (coiled after R2)".
std::string status_line(const Verdict& v);

const char* step_kind_name(StepKind k);
// One certificate line: "<KIND> <colon-separated-site-ints> <mirror 0|1>".
std::string format_step(const Step& s);

// Certificate text: comment header with the verdict, the source diagram's
// PD line, one line per step, and a trailing terminal comment.
std::string write_certificate(const Diagram& source, const Verdict& v);

struct ReplayReport {
    bool ok = false;
    std::string error;        // empty when ok
    int failed_step = -1;     // index of the offending step, -1 otherwise
    Diagram terminal;
    std::vector<Step> steps;  // parsed steps (with n_after filled)
};

// Re-run a certificate: parse the source PD, re-derive and re-check each
// step at its current diagram, enforce crossing-count monotonicity (strict
// decrease at UNTONGUE/UNTWIRL/R2_CLASP/R1_KINK) and exact Jones invariance
// per step, and confirm the terminal state matches the recorded verdict.
ReplayReport replay_certificate(const std::string& text);

}  // namespace aak
