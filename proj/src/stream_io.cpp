#include "scs/stream_io.hpp"

#include "scs/rational.hpp"

#include <cmath>
#include <istream>
#include <ostream>

namespace scs {
namespace io {

void write_u8(std::ostream& out, uint8_t v) { out.put(static_cast<char>(v)); }

void write_u32(std::ostream& out, uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.put(static_cast<char>((v >> shift) & 0xff));
}

void write_u64(std::ostream& out, uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) out.put(static_cast<char>((v >> shift) & 0xff));
}

void write_string(std::ostream& out, const std::string& s) {
  write_u32(out, static_cast<uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

uint8_t read_u8(std::istream& in) {
  int c = in.get();
  if (c == EOF) throw parse_error("unexpected end of stream");
  return static_cast<uint8_t>(c);
}

uint32_t read_u32(std::istream& in) {
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | read_u8(in);
  return v;
}

uint64_t read_u64(std::istream& in) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | read_u8(in);
  return v;
}

std::string read_string(std::istream& in) {
  uint32_t len = read_u32(in);
  std::string s(len, '\0');
  in.read(s.data(), len);
  if (in.gcount() != static_cast<std::streamsize>(len))
    throw parse_error("unexpected end of stream");
  return s;
}

}  // namespace io

std::vector<uint8_t> bytes_to_bits(const std::vector<uint8_t>& bytes) {
  std::vector<uint8_t> bits;
  bits.reserve(bytes.size() * 8);
  for (uint8_t b : bytes)
    for (int i = 7; i >= 0; --i) bits.push_back((b >> i) & 1);
  return bits;
}

std::vector<uint8_t> bits_to_bytes(const std::vector<uint8_t>& bits) {
  std::vector<uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) bytes[i / 8] |= static_cast<uint8_t>(1u << (7 - i % 8));
  return bytes;
}

std::vector<uint8_t> frame_payload(const std::vector<uint8_t>& payload_bytes) {
  uint64_t nbits = static_cast<uint64_t>(payload_bytes.size()) * 8;
  std::vector<uint8_t> bits;
  bits.reserve(64 + nbits);
  for (int i = 63; i >= 0; --i) bits.push_back(static_cast<uint8_t>((nbits >> i) & 1));
  std::vector<uint8_t> body = bytes_to_bits(payload_bytes);
  bits.insert(bits.end(), body.begin(), body.end());
  return bits;
}

std::vector<uint8_t> deframe_payload(const std::vector<uint8_t>& bits) {
  if (bits.size() < 64) throw decode_error("framed payload shorter than its header");
  uint64_t nbits = 0;
  for (int i = 0; i < 64; ++i) nbits = (nbits << 1) | bits[i];
  if (nbits % 8 != 0 || bits.size() < 64 + nbits)
    throw decode_error("framed payload length header is inconsistent");
  std::vector<uint8_t> body(bits.begin() + 64, bits.begin() + 64 + nbits);
  return bits_to_bytes(body);
}

std::vector<uint8_t> pad_to_group(std::vector<uint8_t> bits, int group) {
  if (group < 1) throw std::invalid_argument("group must be positive");
  while (bits.size() % static_cast<size_t>(group) != 0) bits.push_back(0);
  return bits;
}

namespace {

constexpr char kMagic[4] = {'S', 'C', 'S', 'W'};
constexpr uint8_t kVersion = 1;

int symbol_width(int sigma) {
  int width = 1;
  while ((1 << width) < sigma) ++width;
  return width;
}

}  // namespace

void write_stream(std::ostream& out, const StreamHeader& header, const Word& w) {
  out.write(kMagic, 4);
  io::write_u8(out, kVersion);
  io::write_u8(out, header.mode);
  if (header.mode == StreamHeader::kModeBlock) {
    io::write_u32(out, header.m);
  } else {
    io::write_u8(out, header.p);
    io::write_u8(out, header.q);
    io::write_u8(out, header.anticipation);
    io::write_u32(out, header.flush_symbols);
  }
  io::write_u64(out, header.payload_bits);
  io::write_u8(out, static_cast<uint8_t>(w.alphabet()->size()));
  io::write_u64(out, static_cast<uint64_t>(w.size()));
  int width = symbol_width(w.alphabet()->size());
  std::vector<uint8_t> bits;
  bits.reserve(static_cast<size_t>(w.size()) * width);
  for (int i = 0; i < w.size(); ++i)
    for (int b = width - 1; b >= 0; --b) bits.push_back((w[i] >> b) & 1);
  std::vector<uint8_t> bytes = bits_to_bytes(bits);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

std::pair<StreamHeader, Word> read_stream(std::istream& in, const AlphabetPtr& alphabet) {
  char magic[4];
  in.read(magic, 4);
  if (in.gcount() != 4 || std::string(magic, 4) != std::string(kMagic, 4))
    throw parse_error("not an encoded-stream file (bad magic)");
  if (io::read_u8(in) != kVersion) throw parse_error("unsupported stream version");
  StreamHeader header;
  header.mode = io::read_u8(in);
  if (header.mode == StreamHeader::kModeBlock) {
    header.m = io::read_u32(in);
  } else if (header.mode == StreamHeader::kModeSliding) {
    header.p = io::read_u8(in);
    header.q = io::read_u8(in);
    header.anticipation = io::read_u8(in);
    header.flush_symbols = io::read_u32(in);
  } else {
    throw parse_error("unknown stream mode");
  }
  header.payload_bits = io::read_u64(in);
  int sigma = io::read_u8(in);
  if (sigma != alphabet->size())
    throw parse_error("stream alphabet size does not match the spec");
  uint64_t n = io::read_u64(in);
  int width = symbol_width(sigma);
  uint64_t nbits = n * static_cast<uint64_t>(width);
  std::vector<uint8_t> bytes((nbits + 7) / 8);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (in.gcount() != static_cast<std::streamsize>(bytes.size()))
    throw parse_error("unexpected end of stream");
  std::vector<uint8_t> bits = bytes_to_bits(bytes);
  std::vector<uint8_t> symbols(n);
  for (uint64_t i = 0; i < n; ++i) {
    int v = 0;
    for (int b = 0; b < width; ++b) v = (v << 1) | bits[i * width + b];
    if (v >= sigma) throw parse_error("symbol index out of range in stream");
    symbols[i] = static_cast<uint8_t>(v);
  }
  return {header, Word(alphabet, std::move(symbols))};
}

}  // namespace scs
