#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "darboux/rational.hpp"
#include "darboux/seeds.hpp"

namespace darboux {

// Surface syntax for seed functions:
//   seed     := [ rational "*" ] ( "sin(" int "x)" | "cos(" int "x)" | "x^" int )
//   rational := int [ "/" int ]
struct SeedExprAst {
  struct Sin { int k; };
  struct Cos { int k; };
  struct Pow { int e; };
  struct Scale {
    Rational factor;
    std::shared_ptr<SeedExprAst> child;
  };
  std::variant<Sin, Cos, Pow, Scale> node = Sin{1};
};

bool ast_equal(const SeedExprAst& a, const SeedExprAst& b);

class SeedParseError : public std::runtime_error {
 public:
  SeedParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

SeedExprAst parse_seed(std::string_view text);
std::string pretty_print(const SeedExprAst& ast);

// Scale factors do not change the seed's role in a chain; they are
// returned separately and recorded by callers.
std::pair<SeedSpec, Rational> to_seed_spec(const SeedExprAst& ast);

}  // namespace darboux
