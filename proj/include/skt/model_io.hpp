#ifndef SKT_MODEL_IO_HPP
#define SKT_MODEL_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "skt/hermitian.hpp"

namespace skt {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

/// Parsed model file: the Hermitian model plus the document metadata.
struct ModelDocument {
  HermitianModel model;
  std::vector<std::string> basis_names;
  std::map<std::string, std::string> meta;
};

/// Text grammar (one directive per line, `#` starts a comment):
///   dim <2n>
///   basis <2n names>
///   bracket <i> <j> <k> <scalar>     # [e_i, e_j] += c e_k, 1-based, additive
///   metric diag <2n scalars>  |  metric row <2n scalars> (x 2n)
///   J pair <i> <j> (x n)      |  J row <2n scalars> (x 2n)
///   meta <key> <value...>
/// Scalars are decimal literals or exact rationals `a/b`.
ModelDocument parse_model_text(const std::string& text);
ModelDocument parse_model_file(const std::string& path);

/// Inverse of the parser; parse(serialize_model(d)) reproduces the structure
/// constants, metric and J bit-for-bit.
std::string serialize_model(const ModelDocument& doc);

/// Fixed 17-significant-digit decimal rendering used everywhere a scalar is
/// printed (reports, serialized models).
std::string format_scalar(double v);

}  // namespace skt

#endif
