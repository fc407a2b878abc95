#pragma once

#include "scs/words.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace scs {

/// Big-endian primitive codecs shared by every binary format in the library.
namespace io {
void write_u8(std::ostream& out, uint8_t v);
void write_u32(std::ostream& out, uint32_t v);
void write_u64(std::ostream& out, uint64_t v);
void write_string(std::ostream& out, const std::string& s);
uint8_t read_u8(std::istream& in);
uint32_t read_u32(std::istream& in);
uint64_t read_u64(std::istream& in);
std::string read_string(std::istream& in);
}  // namespace io

/// Bits are represented as vectors of 0/1 bytes, most significant bit first.
std::vector<uint8_t> bytes_to_bits(const std::vector<uint8_t>& bytes);
/// Zero-pads the tail to a byte boundary.
std::vector<uint8_t> bits_to_bytes(const std::vector<uint8_t>& bits);

/// Self-delimiting payload framing: a 64-bit big-endian bit-length header
/// followed by the payload bits. Padding to any group size may follow; the
/// header lets deframing recover the exact payload.
std::vector<uint8_t> frame_payload(const std::vector<uint8_t>& payload_bytes);
std::vector<uint8_t> deframe_payload(const std::vector<uint8_t>& bits);
/// Pads bits with zeros up to a multiple of group (group >= 1).
std::vector<uint8_t> pad_to_group(std::vector<uint8_t> bits, int group);

/// Encoded-stream container: magic, version, mode, mode parameters, payload
/// bit length, then the symbol stream packed ceil(log2 sigma) bits per symbol
/// big-endian.
struct StreamHeader {
  static constexpr uint8_t kModeBlock = 0;
  static constexpr uint8_t kModeSliding = 1;
  uint8_t mode = kModeBlock;
  uint32_t m = 0;                // block mode
  uint8_t p = 0, q = 0;          // sliding mode
  uint8_t anticipation = 0;      // sliding mode, in q-symbol blocks
  uint32_t flush_symbols = 0;    // sliding mode trailing flush
  uint64_t payload_bits = 0;     // framed payload bit count fed to the encoder
};

void write_stream(std::ostream& out, const StreamHeader& header, const Word& w);
std::pair<StreamHeader, Word> read_stream(std::istream& in, const AlphabetPtr& alphabet);

}  // namespace scs
