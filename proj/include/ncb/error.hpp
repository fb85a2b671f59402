#pragma once

#include <stdexcept>
#include <string>

namespace ncb {

// Error taxonomy shared across the library. Every failure surfaced to
// callers derives from ncb::error so the CLI can map categories to
// distinct exit codes.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (edge lists, GML, partition CSV).
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

// Structurally valid input that leaves nothing to work on (zero edges).
class empty_graph_error : public error {
public:
    explicit empty_graph_error(const std::string& what) : error(what) {}
};

// Out-of-range ids, mismatched node sets, invalid set arguments.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// A quantity with no defined value: conductance of the whole vertex set,
// gravitation of an isolated node, stability of a zero-volume community.
class undefined_error : public error {
public:
    explicit undefined_error(const std::string& what) : error(what) {}
};

// Invalid run configuration (CLI-level misuse that survives flag parsing).
class config_error : public error {
public:
    explicit config_error(const std::string& what) : error(what) {}
};

}  // namespace ncb
