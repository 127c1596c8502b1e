#pragma once

#include <stdexcept>
#include <string>

#include "seshadri/series.hpp"

namespace seshadri {

/// A result could not be certified at the available series precision.
class PrecisionShortfall : public std::runtime_error
{
public:
    PrecisionShortfall(const std::string& what, Precision available, Precision required)
        : std::runtime_error(what), available_(available), required_(required)
    {
    }

    Precision available() const { return available_; }
    /// Smallest precision known to suffice; 0 when not known.
    Precision required() const { return required_; }

private:
    Precision available_;
    Precision required_;
};

} // namespace seshadri
