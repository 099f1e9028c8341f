#pragma once

#include <stdexcept>
#include <string>

namespace qgt {

/// Base class for all domain errors raised by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Squared amplitudes (or probabilities) do not sum to 1 within tolerance.
class not_normalized : public error {
public:
    explicit not_normalized(const std::string& what) : error(what) {}
};

/// An input value is NaN or infinite.
class non_finite : public error {
public:
    explicit non_finite(const std::string& what) : error(what) {}
};

class negative_probability : public error {
public:
    explicit negative_probability(const std::string& what) : error(what) {}
};

/// A density matrix diagonal carries an imaginary residue above tolerance.
class non_real_diagonal : public error {
public:
    explicit non_real_diagonal(const std::string& what) : error(what) {}
};

/// A caller violated an operation's stated precondition.
class precondition_violated : public error {
public:
    explicit precondition_violated(const std::string& what) : error(what) {}
};

/// Battle-of-the-Sexes payoffs must satisfy alpha > beta > gamma.
class ordering_violated : public error {
public:
    explicit ordering_violated(const std::string& what) : error(what) {}
};

class invalid_epsilon : public error {
public:
    explicit invalid_epsilon(const std::string& what) : error(what) {}
};

class invalid_delta : public error {
public:
    explicit invalid_delta(const std::string& what) : error(what) {}
};

class invalid_grid : public error {
public:
    explicit invalid_grid(const std::string& what) : error(what) {}
};

/// A scenario file failed to parse or validate.
class scenario_error : public error {
public:
    explicit scenario_error(const std::string& what) : error(what) {}
};

} // namespace qgt
