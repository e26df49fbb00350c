#pragma once

#include <stdexcept>
#include <string>

namespace ghs {

/// Base class of all library errors. `name()` is the stable identifier
/// printed by the CLI on the first output line.
class error : public std::runtime_error {
public:
    error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error("DomainError", what) {}
};

class division_by_zero : public error {
public:
    explicit division_by_zero(const std::string& what) : error("DivisionByZero", what) {}
};

class schema_domain_error : public error {
public:
    explicit schema_domain_error(const std::string& what) : error("SchemaDomainError", what) {}
};

class window_error : public error {
public:
    explicit window_error(const std::string& what) : error("WindowError", what) {}
};

class no_asymptotic_integral : public error {
public:
    explicit no_asymptotic_integral(const std::string& what)
        : error("NoAsymptoticIntegral", what) {}
};

class search_exhausted : public error {
public:
    explicit search_exhausted(const std::string& what) : error("SearchExhausted", what) {}
};

/// Parse failures carry the byte offset of the offending token and a short
/// description of what was expected there.
class parse_error : public error {
public:
    parse_error(std::size_t position, const std::string& expected)
        : error("ParseError",
                "at position " + std::to_string(position) + ": expected " + expected),
          position_(position), expected_(expected) {}
    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

class config_error : public error {
public:
    explicit config_error(const std::string& what) : error("ConfigError", what) {}
};

} // namespace ghs
