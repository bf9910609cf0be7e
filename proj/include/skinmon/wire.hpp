// Bit-exact wire format used for message pricing.
//
// Every field is fixed width: a 2-bit kind tag, 16-bit node ids, and 16-bit
// quantized coordinates / energies / distances. The kind is recoverable from
// the leading two bits alone and the three protocol messages have pairwise
// distinct lengths (STATUS 50 < LOCATION 66 < CHANGE 100 bits).
#pragma once

#include <cstdint>
#include <vector>

#include "skinmon/types.hpp"

namespace skinmon {

// Quantization scales. Coordinates are patch-relative fixed point, energy is
// linear over [0, initial_energy], relay distances over the patch diagonal.
struct WireContext {
    double patch_width = 20.0;
    double patch_height = 20.0;
    double initial_energy = 500000.0;
};

// MSB-first packed bits; the final byte is zero-padded.
std::vector<std::uint8_t> encode(const Message& msg, const WireContext& ctx);

// Inverse of encode up to field quantization: decoding an encoded message
// yields the quantized field values, so encode(decode(encode(m))) ==
// encode(m) for every message and decode is exact on lattice-valued fields.
Message decode(const std::vector<std::uint8_t>& bytes, const WireContext& ctx);

std::uint16_t quantize(double value, double max_value);
double dequantize(std::uint16_t q, double max_value);

}  // namespace skinmon
