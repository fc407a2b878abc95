#include "scs/block_encoder.hpp"
#include "scs/capacity.hpp"
#include "scs/essential.hpp"
#include "scs/sliding_encoder.hpp"
#include "scs/spec_format.hpp"
#include "scs/stream_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace scs;

ConstraintSet system_of(const Spec& spec, const std::string& eps_flag) {
  ConstraintSet gamma = spec.constraint_set();
  std::optional<Rational> eps;
  if (!eps_flag.empty())
    eps = parse_rational(eps_flag);
  else if (spec.eps)
    eps = spec.eps;
  if (eps && *eps != 0) return shrink(gamma, *eps);
  return gamma;
}

Rational eps_of(const Spec& spec, const std::string& eps_flag) {
  if (!eps_flag.empty()) return parse_rational(eps_flag);
  if (spec.eps) return *spec.eps;
  return Rational(0);
}

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open input file '" + path + "'");
  std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  return data;
}

void write_file(const std::string& path, const std::vector<uint8_t>& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot open output file '" + path + "'");
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
}

std::string mode_of(const Spec& spec, const std::string& mode_flag) {
  if (!mode_flag.empty()) return mode_flag;
  if (spec.mode) return *spec.mode;
  throw parse_error("no mode given (use --mode block|sliding or a 'mode' line in the spec)");
}

int pick(const std::optional<int>& from_spec, int flag, const std::string& name) {
  if (flag > 0) return flag;
  if (from_spec) return *from_spec;
  throw parse_error("missing parameter " + name);
}

void cmd_capacity(const std::string& spec_path, const std::string& eps_flag, bool bounds,
                  int brute) {
  Spec spec = load_spec(spec_path);
  ConstraintSet gamma = system_of(spec, eps_flag);
  CapacityResult r = capacity_scs(gamma);
  if (!r.feasible) throw infeasible_error("no shift-invariant measure satisfies the system");
  std::cout << std::fixed << std::setprecision(4) << r.value << " bits/symbol\n";
  if (bounds) {
    CapacityBounds b = capacity_bounds(gamma);
    std::cout << "lower " << (b.lower_finite ? std::to_string(b.lower) : "-inf") << "\n";
    std::cout << "upper " << (b.upper_finite ? std::to_string(b.upper) : "-inf") << "\n";
  }
  if (brute > 0) {
    std::cout << "n,count,rate\n";
    for (const auto& s : capacity_bruteforce(gamma, brute))
      std::cout << s.n << "," << s.count << "," << std::setprecision(6) << s.rate << "\n";
  }
}

void cmd_enumerate(const std::string& spec_path, const std::string& eps_flag, int n,
                   bool count_only) {
  Spec spec = load_spec(spec_path);
  ConstraintSet gamma = system_of(spec, eps_flag);
  if (count_only) {
    std::cout << count_admissible(gamma, n) << "\n";
    return;
  }
  for (const Word& w : enumerate_admissible(gamma, n)) std::cout << w.str() << "\n";
}

void cmd_check(const std::string& spec_path, const std::string& file, const std::string& word) {
  Spec spec = load_spec(spec_path);
  ConstraintSet gamma = spec.constraint_set();
  Word w;
  if (!word.empty()) {
    w = Word::parse(spec.alphabet, word);
  } else {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw parse_error("cannot open stream file '" + file + "'");
    w = read_stream(in, spec.alphabet).second;
  }
  if (is_admissible(gamma, w)) {
    std::cout << "admissible\n";
  } else {
    std::cout << "not admissible\n";
    throw infeasible_error("word is not admissible");
  }
}

void cmd_build_encoder(const std::string& spec_path, const std::string& mode_flag,
                       const std::string& eps_flag, int m_flag, int p_flag, int q_flag,
                       const std::string& out_path) {
  Spec spec = load_spec(spec_path);
  std::string mode = mode_of(spec, mode_flag);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw parse_error("cannot open output file '" + out_path + "'");
  if (mode == "block") {
    int m = pick(spec.m, m_flag, "m");
    BlockCode code = build_block_code(spec.constraint_set(), eps_of(spec, eps_flag), m);
    save_block_code(code, out);
    BlockRate rate = block_rate(code);
    std::cout << "block code: m=" << code.m << " codewords=" << code.codewords.size()
              << " bits_per_block=" << code.bits_per_block << " rate=" << std::fixed
              << std::setprecision(4) << rate.achieved << "\n";
  } else {
    int m = pick(spec.m, m_flag, "m");
    int p = pick(spec.p, p_flag, "p");
    int q = pick(spec.q, q_flag, "q");
    ConstraintSet gamma = system_of(spec, eps_flag);
    Encoder enc = build_sliding_encoder(gamma, m, p, q);
    save_encoder(enc, out);
    std::cout << "sliding encoder: states=" << enc.num_states
              << " edges=" << enc.edges.size() << " p=" << enc.p << " q=" << enc.q
              << " anticipation=" << enc.anticipation << "\n";
  }
}

void cmd_encode(const std::string& spec_path, const std::string& mode_flag,
                const std::string& eps_flag, int m_flag, int p_flag, int q_flag,
                const std::string& in_path, const std::string& out_path) {
  Spec spec = load_spec(spec_path);
  std::string mode = mode_of(spec, mode_flag);
  std::vector<uint8_t> payload = read_file(in_path);
  std::vector<uint8_t> bits = frame_payload(payload);
  StreamHeader header;
  header.payload_bits = bits.size();
  Word w;
  if (mode == "block") {
    int m = pick(spec.m, m_flag, "m");
    BlockCode code = build_block_code(spec.constraint_set(), eps_of(spec, eps_flag), m);
    bits = pad_to_group(std::move(bits), code.bits_per_block);
    w = block_encode(code, bits);
    header.mode = StreamHeader::kModeBlock;
    header.m = static_cast<uint32_t>(m);
  } else {
    int m = pick(spec.m, m_flag, "m");
    int p = pick(spec.p, p_flag, "p");
    int q = pick(spec.q, q_flag, "q");
    Encoder enc = build_sliding_encoder(system_of(spec, eps_flag), m, p, q);
    bits = pad_to_group(std::move(bits), p);
    w = encoder_encode(enc, bits);
    header.mode = StreamHeader::kModeSliding;
    header.p = static_cast<uint8_t>(p);
    header.q = static_cast<uint8_t>(q);
    header.anticipation = static_cast<uint8_t>(enc.anticipation);
    header.flush_symbols = static_cast<uint32_t>(flush_symbols(enc));
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw parse_error("cannot open output file '" + out_path + "'");
  write_stream(out, header, w);
  std::cout << "encoded " << payload.size() << " bytes into " << w.size() << " symbols\n";
}

void cmd_decode(const std::string& spec_path, const std::string& eps_flag, const std::string& in_path,
                const std::string& out_path) {
  Spec spec = load_spec(spec_path);
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw parse_error("cannot open input file '" + in_path + "'");
  auto [header, w] = read_stream(in, spec.alphabet);
  std::vector<uint8_t> bits;
  if (header.mode == StreamHeader::kModeBlock) {
    BlockCode code = build_block_code(spec.constraint_set(), eps_of(spec, eps_flag),
                                      static_cast<int>(header.m));
    bits = block_decode(code, w);
  } else {
    int m = spec.m ? *spec.m : 0;
    if (m == 0) throw parse_error("spec must carry m to rebuild the sliding encoder");
    Encoder enc = build_sliding_encoder(system_of(spec, eps_flag), m, header.p, header.q);
    bits = encoder_decode(enc, w);
  }
  std::vector<uint8_t> payload = deframe_payload(bits);
  write_file(out_path, payload);
  std::cout << "decoded " << payload.size() << " bytes\n";
}

void cmd_ess_graph(const std::string& spec_path, bool dot) {
  Spec spec = load_spec(spec_path);
  ConstraintSet gamma = spec.constraint_set();
  EssentialGraph ess = essential_graph(gamma);
  if (dot) {
    std::cout << essential_dot(ess);
    return;
  }
  std::cout << "vertices " << ess.graph.num_vertices() << "\n";
  std::cout << "edges " << ess.graph.num_edges() << "\n";
  double bits = 0;
  if (ess.graph.num_edges() > 0) graph_capacity(ess.graph, &bits);
  std::cout << "containing capacity " << std::fixed << std::setprecision(4) << bits << "\n";
  ZeroCapacityReport z = zero_capacity_equiv(gamma);
  std::cout << "zero capacity " << (z.cap_sup_zero ? "yes" : "no") << "\n";
}

void cmd_complete_prefix(const std::string& spec_path, const std::string& alpha_text) {
  Spec spec = load_spec(spec_path);
  ConstraintSet gamma = spec.constraint_set();
  Word alpha = alpha_text.empty() ? Word::empty(spec.alphabet)
                                  : Word::parse(spec.alphabet, alpha_text);
  Word beta = prefix_completion(gamma, alpha);
  std::cout << "beta " << beta.str() << "\n";
  std::cout << "word " << concat(alpha, beta).str() << "\n";
}

void cmd_report(const std::string& spec_path, const std::string& eps_flag,
                std::vector<int> block_lengths, int verify_length, std::vector<int> sliding) {
  Spec spec = load_spec(spec_path);
  ConstraintSet gamma = spec.constraint_set();
  Rational eps = eps_of(spec, eps_flag);
  std::cout << "== system ==\n";
  std::cout << "alphabet size " << spec.alphabet->size() << ", k " << spec.k << ", constraints "
            << spec.constraints.size() << ", eps " << to_string(eps) << "\n";
  CapacityResult cap = capacity_scs(gamma);
  std::cout << "capacity " << std::fixed << std::setprecision(4) << cap.value
            << " bits/symbol\n";
  std::cout << "\n== block coding ==\n";
  long meps = min_block_length(spec.k, eps);
  std::cout << "safe block threshold M_eps " << meps << "\n";
  BlockVerification v = verify_block_length(gamma, eps, verify_length);
  std::cout << "verify m=" << verify_length << ": " << (v.ok ? "safe" : "unsafe");
  if (!v.ok && v.witness) std::cout << " (witness " << v.witness->str() << ")";
  std::cout << "\n";
  if (!v.ok) {
    BlockVerification v2 = verify_block_length(gamma, eps, verify_length + 1);
    std::cout << "verify m=" << verify_length + 1 << ": " << (v2.ok ? "safe" : "unsafe") << "\n";
  }
  for (int m : block_lengths) {
    BlockCode code = build_block_code(gamma, eps, m);
    BlockRate rate = block_rate(code);
    std::cout << "m=" << m << ": " << code.codewords.size() << " codewords, "
              << code.bits_per_block << " bits/block, rate " << std::setprecision(4)
              << rate.achieved << "\n";
  }
  if (sliding.size() == 3) {
    std::cout << "\n== sliding coding ==\n";
    int m = sliding[0], p = sliding[1], q = sliding[2];
    Encoder enc = build_sliding_encoder(gamma, m, p, q);
    std::cout << "m=" << m << " p=" << p << " q=" << q << ": " << enc.num_states
              << " states, " << enc.edges.size() << " edges, rate " << p << "/" << q
              << ", anticipation " << enc.anticipation << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiconstrained-system coding toolkit"};
  app.require_subcommand(1);

  std::string spec_path, eps_flag, mode_flag, word_flag, file_arg, in_path, out_path, alpha;
  int n = 0, brute = 0, m_flag = 0, p_flag = 0, q_flag = 0, verify_length = 156;
  bool bounds = false, count_only = false, dot = false;
  std::vector<int> block_lengths{5, 10}, sliding{6, 3, 4};

  auto* c_cap = app.add_subcommand("capacity", "capacity of the system");
  c_cap->add_option("spec", spec_path)->required();
  c_cap->add_option("--eps", eps_flag);
  c_cap->add_flag("--bounds", bounds);
  c_cap->add_option("--brute", brute);

  auto* c_enum = app.add_subcommand("enumerate", "admissible words of length n");
  c_enum->add_option("spec", spec_path)->required();
  c_enum->add_option("-n", n)->required();
  c_enum->add_option("--eps", eps_flag);
  c_enum->add_flag("--count", count_only);

  auto* c_check = app.add_subcommand("check", "admissibility of a stream or word");
  c_check->add_option("spec", spec_path)->required();
  c_check->add_option("file", file_arg);
  c_check->add_option("--word", word_flag);

  auto* c_build = app.add_subcommand("build-encoder", "build and save an encoder");
  c_build->add_option("spec", spec_path)->required();
  c_build->add_option("--mode", mode_flag);
  c_build->add_option("--eps", eps_flag);
  c_build->add_option("-m", m_flag);
  c_build->add_option("-p", p_flag);
  c_build->add_option("-q", q_flag);
  c_build->add_option("-o,--output", out_path)->required();

  auto* c_enc = app.add_subcommand("encode", "encode a file");
  c_enc->add_option("spec", spec_path)->required();
  c_enc->add_option("input", in_path)->required();
  c_enc->add_option("output", out_path)->required();
  c_enc->add_option("--mode", mode_flag);
  c_enc->add_option("--eps", eps_flag);
  c_enc->add_option("-m", m_flag);
  c_enc->add_option("-p", p_flag);
  c_enc->add_option("-q", q_flag);

  auto* c_dec = app.add_subcommand("decode", "decode a stream file");
  c_dec->add_option("spec", spec_path)->required();
  c_dec->add_option("input", in_path)->required();
  c_dec->add_option("output", out_path)->required();
  c_dec->add_option("--eps", eps_flag);

  auto* c_ess = app.add_subcommand("ess-graph", "essential graph of the system");
  c_ess->add_option("spec", spec_path)->required();
  c_ess->add_flag("--dot", dot);

  auto* c_pref = app.add_subcommand("complete-prefix", "complete a prefix to an admissible word");
  c_pref->add_option("spec", spec_path)->required();
  c_pref->add_option("alpha", alpha);

  auto* c_rep = app.add_subcommand("report", "case-study report for the system");
  c_rep->add_option("spec", spec_path)->required();
  c_rep->add_option("--eps", eps_flag);
  c_rep->add_option("--block-lengths", block_lengths);
  c_rep->add_option("--verify-length", verify_length);
  c_rep->add_option("--sliding", sliding);

  try {
    app.parse(argc, argv);
    if (c_cap->parsed()) cmd_capacity(spec_path, eps_flag, bounds, brute);
    if (c_enum->parsed()) cmd_enumerate(spec_path, eps_flag, n, count_only);
    if (c_check->parsed()) cmd_check(spec_path, file_arg, word_flag);
    if (c_build->parsed())
      cmd_build_encoder(spec_path, mode_flag, eps_flag, m_flag, p_flag, q_flag, out_path);
    if (c_enc->parsed())
      cmd_encode(spec_path, mode_flag, eps_flag, m_flag, p_flag, q_flag, in_path, out_path);
    if (c_dec->parsed()) cmd_decode(spec_path, eps_flag, in_path, out_path);
    if (c_ess->parsed()) cmd_ess_graph(spec_path, dot);
    if (c_pref->parsed()) cmd_complete_prefix(spec_path, alpha);
    if (c_rep->parsed()) cmd_report(spec_path, eps_flag, block_lengths, verify_length, sliding);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const infeasible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const rate_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const decode_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
