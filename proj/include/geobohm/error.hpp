#pragma once
#include <stdexcept>
#include <string>

namespace geobohm {

enum class ErrorKind {
    invalid_parameter,
    degenerate_bubble,
    degenerate_phase,
    pole,
    branch,
    singular_boundary,
    degenerate_matching,
    resonant,
    singular_theta9,
    nonpositive_theta12,
    singular_taylor,
    node,
    singular_metric,
};

const char* to_string(ErrorKind k);

class ModelError : public std::runtime_error {
public:
    ModelError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace geobohm
