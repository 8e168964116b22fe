#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "lieelem/verify.hpp"

namespace lietool {

enum ExitCode { exit_pass = 0, exit_failure = 1, exit_usage = 2, exit_resource = 3 };

/// Weight tables read from a file; entries not given are zero.
struct WeightFile {
  lieelem::PairWeights<lieelem::Rational> pairs;
  lieelem::TripleWeights<lieelem::Rational> triples;
  lieelem::QuadWeights<lieelem::Rational> quads;
};

/// {"pairs": [[i,j,"w"]], "triples": [[i,j,k,"w"]], "quads": [[i,j,k,l,"w"]]}.
/// Throws ParseError (with line and column for malformed JSON) or ConflictError.
WeightFile parse_weights(const std::string& text, int n);
WeightFile load_weights(const std::string& path, int n);

/// A JSON array of rows of rational strings ("3/4") or integers.
lieelem::QMatrix parse_matrix(const std::string& text);

nlohmann::ordered_json report_json(const lieelem::VerificationReport& rep, bool timing);

/// Runs the command line; everything is written to out / err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lietool
