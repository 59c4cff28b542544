#pragma once

#include <string>

#include "fractalts/mfdfa.hpp"
#include "fractalts/xcorr.hpp"

namespace fractalts {

/// CSV with columns q,tau,F (rows in q-major order), 17 significant digits.
std::string fluctuation_to_csv(const FluctuationTable& table);

/// CSV with columns q,h,r2.
std::string spectrum_to_csv(const HurstSpectrum& spectrum);

/// CSV with columns lag,ccf,band.
std::string ccf_to_csv(const CcfResult& result);

/// JSON documents with fields mirroring the structs. Two-space indent,
/// stable field order, trailing newline.
std::string fluctuation_to_json(const FluctuationTable& table);
std::string spectrum_to_json(const HurstSpectrum& spectrum);
std::string ccf_to_json(const CcfResult& result);

}  // namespace fractalts
