#pragma once

#include <string>

#include "su2para/spectral.hpp"
#include "su2para/symbol.hpp"
#include "su2para/types.hpp"

namespace su2para {

// Write text atomically (temp file + rename in the same directory).
void atomic_write_text(const std::string& path, const std::string& content);

// Round-trip JSON for spectral data and symbols.  Complex entries are stored
// as [re, im] pairs with shortest round-trip formatting.
std::string spectral_to_json(const SpectralFunction& f);
SpectralFunction spectral_from_json(const std::string& text);
void save_spectral(const std::string& path, const SpectralFunction& f);
SpectralFunction load_spectral(const std::string& path);

std::string symbol_to_json(const Symbol& a);
Symbol symbol_from_json(const std::string& text);
void save_symbol(const std::string& path, const Symbol& a);
Symbol load_symbol(const std::string& path);

// "%.17g" formatting used by CSV reports.
std::string format_g17(double x);

}  // namespace su2para
