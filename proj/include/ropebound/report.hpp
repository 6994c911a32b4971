#pragma once

#include <cstdint>
#include <string>

#include "ropebound/bounds.hpp"
#include "ropebound/decay.hpp"
#include "ropebound/mc.hpp"
#include "ropebound/ood.hpp"

namespace ropebound {

// 17 significant digits, enough to round-trip a double through text.
std::string format_g17(double v);

// CSV renderings. Booleans print as 0/1, reals at 17 significant digits.
std::string to_csv(const CurveSamples& curve);                // m,value
std::string to_csv(const OodReport& report);                  // one row per dimension
std::string to_csv(const std::vector<Table2Row>& rows);       // context_length,base_lower_bound
std::string to_csv(const BoundResult& result);
std::string to_csv(const LengthResult& result);
std::string to_csv(const McReport& report, const McConfig& cfg, const std::string& schedule,
                   int d, std::int64_t m);

// JSON renderings (full-precision unquoted numbers).
std::string to_json(const BoundResult& result);
std::string to_json(const LengthResult& result);
std::string to_json(const McReport& report, const McConfig& cfg, const std::string& schedule,
                    int d, std::int64_t m);
std::string to_json(const CurveSamples& curve);
std::string to_json(const OodReport& report);
std::string to_json(const std::vector<Table2Row>& rows);

}  // namespace ropebound
