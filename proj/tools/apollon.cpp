#include <CLI11.hpp>

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "apollon/enumeration.hpp"
#include "apollon/errors.hpp"
#include "apollon/frames.hpp"
#include "apollon/numerics.hpp"
#include "apollon/render.hpp"
#include "apollon/symbols.hpp"

namespace {

using namespace apollon;

Int parse_int(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.push_back("");
  return parts;
}

GasketKey parse_key(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) {
    throw std::invalid_argument("key must be four comma-separated integers B,MU,K,N");
  }
  const GasketKey key{parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]),
                      parse_int(parts[3])};
  if (const auto violation = key_violation(key)) {
    throw std::invalid_argument("invalid key: " + *violation);
  }
  return key;
}

Rat parse_rat(const std::string& text) {
  const auto parts = split(text, '/');
  if (parts.size() == 1) return Rat(parse_int(parts[0]));
  if (parts.size() == 2) return Rat(parse_int(parts[0]), parse_int(parts[1]));
  throw std::invalid_argument("not a rational: '" + text + "'");
}

unsigned thread_cap() {
  const char* env = std::getenv("APOLLON_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == nullptr || *end != '\0' || v == 0 || v > 4096) {
    throw std::invalid_argument("APOLLON_THREADS must be a positive integer");
  }
  return static_cast<unsigned>(v);
}

enum class Format { Json, Csv, Table };

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "table") return Format::Table;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or table)");
}

LabelMode parse_labels(const std::string& name) {
  if (name == "none") return LabelMode::None;
  if (name == "bends") return LabelMode::Bends;
  if (name == "symbols") return LabelMode::Symbols;
  throw std::invalid_argument("unknown label mode '" + name +
                              "' (expected none, bends or symbols)");
}

constexpr std::array<const char*, 12> kRecordColumns = {
    "B", "mu", "k", "n", "b0", "b1", "b2", "b3", "b4", "shift", "symmetry", "reducible"};

std::array<std::string, 12> record_fields(const GasketRecord& rec) {
  return {rec.key.B.get_str(),
          rec.key.mu.get_str(),
          rec.key.k.get_str(),
          rec.key.n.get_str(),
          rec.quintet.b0.get_str(),
          rec.quintet.b1.get_str(),
          rec.quintet.b2.get_str(),
          rec.quintet.b3.get_str(),
          rec.quintet.b4.get_str(),
          rec.shift.to_string(),
          to_string(rec.symmetry),
          rec.reducible ? "1" : "0"};
}

constexpr std::array<const char*, 5> kCircleColumns = {"bend", "x_dot", "y_dot", "center_x",
                                                       "center_y"};

std::array<std::string, 5> circle_fields(const CircleSymbol& c) {
  return {c.bend.get_str(), c.x_dot.to_string(), c.y_dot.to_string(), to_decimal(c.center_x()),
          to_decimal(c.center_y())};
}

template <size_t N>
void emit_csv(std::ostream& out, const std::array<const char*, N>& columns,
              const std::vector<std::array<std::string, N>>& rows) {
  for (size_t i = 0; i < N; ++i) out << (i ? "," : "") << columns[i];
  out << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < N; ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
}

template <size_t N>
void emit_table(std::ostream& out, const std::array<const char*, N>& columns,
                const std::vector<std::array<std::string, N>>& rows,
                const std::array<bool, N>& right_align) {
  std::array<size_t, N> width{};
  for (size_t i = 0; i < N; ++i) width[i] = std::string(columns[i]).size();
  for (const auto& row : rows) {
    for (size_t i = 0; i < N; ++i) width[i] = std::max(width[i], row[i].size());
  }
  const auto emit_row = [&](const std::array<std::string, N>& row) {
    std::string line;
    for (size_t i = 0; i < N; ++i) {
      if (i) line += "  ";
      const std::string pad(width[i] - row[i].size(), ' ');
      line += right_align[i] ? pad + row[i] : row[i] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  };
  std::array<std::string, N> header;
  for (size_t i = 0; i < N; ++i) header[i] = columns[i];
  emit_row(header);
  for (const auto& row : rows) emit_row(row);
}

std::string json_escape_free(const std::string& s) { return s; }  // fields never need escaping

void emit_record_json(std::ostream& out, const GasketRecord& rec) {
  const auto f = record_fields(rec);
  out << "{\"B\":" << f[0] << ",\"mu\":" << f[1] << ",\"k\":" << f[2] << ",\"n\":" << f[3]
      << ",\"b0\":" << f[4] << ",\"b1\":" << f[5] << ",\"b2\":" << f[6] << ",\"b3\":" << f[7]
      << ",\"b4\":" << f[8] << ",\"shift\":\"" << json_escape_free(f[9]) << "\",\"symmetry\":\""
      << json_escape_free(f[10]) << "\",\"reducible\":" << (rec.reducible ? "true" : "false")
      << "}\n";
}

void emit_circle_json(std::ostream& out, const CircleSymbol& c) {
  const auto f = circle_fields(c);
  out << "{\"bend\":" << f[0] << ",\"x_dot\":\"" << f[1] << "\",\"y_dot\":\"" << f[2]
      << "\",\"center_x\":" << f[3] << ",\"center_y\":" << f[4] << "}\n";
}

int run_enumerate(const std::string& max_bend_text, const std::string& format_name,
                  bool irreducible_only) {
  const Int max_bend = parse_int(max_bend_text);
  if (max_bend < 0) throw std::invalid_argument("--max-bend must be nonnegative");
  const Format format = parse_format(format_name);
  const auto records = enumerate_records(max_bend, irreducible_only, thread_cap());

  std::ostringstream out;
  if (format == Format::Json) {
    for (const auto& rec : records) emit_record_json(out, rec);
  } else {
    std::vector<std::array<std::string, 12>> rows;
    rows.reserve(records.size());
    for (const auto& rec : records) rows.push_back(record_fields(rec));
    if (format == Format::Csv) {
      emit_csv(out, kRecordColumns, rows);
    } else {
      emit_table(out, kRecordColumns, rows,
                 {true, true, true, true, true, true, true, true, true, true, false, true});
    }
  }
  std::cout << out.str();
  return 0;
}

int run_generate(const std::string& key_text, const std::string& max_bend_text,
                 const std::string& format_name) {
  const GasketKey key = parse_key(key_text);
  const Int max_bend = parse_int(max_bend_text);
  const Format format = parse_format(format_name);
  const Packing packing = generate(key, max_bend);

  std::ostringstream out;
  if (format == Format::Json) {
    for (const auto& c : packing.circles) emit_circle_json(out, c);
  } else {
    std::vector<std::array<std::string, 5>> rows;
    rows.reserve(packing.circles.size());
    for (const auto& c : packing.circles) rows.push_back(circle_fields(c));
    if (format == Format::Csv) {
      emit_csv(out, kCircleColumns, rows);
    } else {
      emit_table(out, kCircleColumns, rows, {true, true, true, true, true});
    }
  }
  std::cout << out.str();
  return 0;
}

void print_frame(std::ostream& out, const Frame& frame) {
  for (size_t s = 0; s < kFrameSlots.size(); ++s) {
    const auto [i, j] = kFrameSlots[s];
    const TriangleTriple& t = frame.triples[s];
    out << "  slot " << i << j << ": delta=" << t.delta.to_string()
        << " gamma=" << t.gamma.to_string() << " h=" << t.h.get_str() << "\n";
  }
}

int run_frames(const std::string& key_text, long depth) {
  if (depth < 0) throw std::invalid_argument("--depth must be nonnegative");
  const GasketKey key = parse_key(key_text);
  const auto symbols = principal_symbols(key);
  DescartesConfig config{{symbols[0], symbols[1], symbols[2], symbols[3]}};
  Frame frame = frame_of(config);

  const BendQuintet q = quintet(key);
  std::ostringstream out;
  out << "key: " << key.B.get_str() << "," << key.mu.get_str() << "," << key.k.get_str() << ","
      << key.n.get_str() << "\n";
  out << "quintet: " << q.b0.get_str() << "," << q.b1.get_str() << "," << q.b2.get_str() << ","
      << q.b3.get_str() << "," << q.b4.get_str() << "\n";
  out << "integral: " << (integral_frames_predicate(key) ? "true" : "false") << "\n";
  out << "principal frame:\n";
  print_frame(out, frame);

  constexpr int cycle[3] = {4, 2, 3};
  for (long step = 1; step <= depth; ++step) {
    const int index = cycle[(step - 1) % 3];
    const Frame by_matrix = frame_transition(frame, config, index);
    config = reflect(config, index);
    const Frame direct = frame_of(config);
    out << "step " << step << ": reflect " << index << "\n";
    print_frame(out, by_matrix);
    out << "  consistent: " << (by_matrix == direct ? "yes" : "no") << "\n";
    frame = by_matrix;
  }
  std::cout << out.str();
  return 0;
}

int run_render(const std::string& key_text, const std::string& max_bend_text,
               const std::string& out_path, const std::string& labels_name, bool draw_frame,
               long width, const std::string& min_radius_text) {
  const GasketKey key = parse_key(key_text);
  const Int max_bend = parse_int(max_bend_text);
  RenderOptions opts;
  opts.width_px = width;
  opts.label_mode = parse_labels(labels_name);
  opts.draw_frame = draw_frame;
  opts.min_radius_px = parse_rat(min_radius_text);

  const Packing packing = generate(key, max_bend);
  const std::string svg = render_svg(packing, opts);

  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 4;
  }
  file << svg;
  file.flush();
  if (!file.good()) {
    std::cerr << "error: failed writing '" << out_path << "'\n";
    return 4;
  }

  size_t count = 0;
  for (size_t pos = 0; (pos = svg.find("<circle ", pos)) != std::string::npos; ++pos) ++count;
  std::cout << count << "\n";
  return 0;
}

int run_matrices() {
  std::cout << matrix_reference_dump();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integral Apollonian disk packings"};
  app.require_subcommand(1);

  std::string max_bend_text, key_text, format_name = "table";
  bool irreducible_only = true;
  auto* cmd_enumerate = app.add_subcommand("enumerate", "list gaskets up to a root bend");
  cmd_enumerate->add_option("--max-bend", max_bend_text, "largest root bend B")->required();
  cmd_enumerate->add_option("--format", format_name, "json, csv or table");
  cmd_enumerate->add_flag("--irreducible-only,!--all", irreducible_only,
                          "only gcd-1 gaskets (--all adds reducible multiples)");

  std::string gen_key, gen_max_bend, gen_format = "table";
  auto* cmd_generate = app.add_subcommand("generate", "expand a gasket into circles");
  cmd_generate->add_option("--key", gen_key, "gasket key B,MU,K,N")->required();
  cmd_generate->add_option("--max-bend", gen_max_bend, "largest circle bend")->required();
  cmd_generate->add_option("--format", gen_format, "json, csv or table");

  std::string frames_key;
  long depth = 0;
  auto* cmd_frames = app.add_subcommand("frames", "principal frame and its recurrence");
  cmd_frames->add_option("--key", frames_key, "gasket key B,MU,K,N")->required();
  cmd_frames->add_option("--depth", depth, "length of the reflection walk");

  std::string render_key, render_max_bend, render_out, labels_name = "none",
                                                       min_radius_text = "1/2";
  bool draw_frame = false;
  long width = 1000;
  auto* cmd_render = app.add_subcommand("render", "write a packing as SVG");
  cmd_render->add_option("--key", render_key, "gasket key B,MU,K,N")->required();
  cmd_render->add_option("--max-bend", render_max_bend, "largest circle bend")->required();
  cmd_render->add_option("--out", render_out, "output SVG path")->required();
  cmd_render->add_option("--labels", labels_name, "none, bends or symbols");
  cmd_render->add_flag("--draw-frame", draw_frame, "draw the principal frame triples");
  cmd_render->add_option("--width", width, "image width in pixels");
  cmd_render->add_option("--min-radius", min_radius_text, "cull circles below this radius in px");

  auto* cmd_matrices = app.add_subcommand("matrices", "dump the frame transition matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_enumerate->parsed()) return run_enumerate(max_bend_text, format_name, irreducible_only);
    if (cmd_generate->parsed()) return run_generate(gen_key, gen_max_bend, gen_format);
    if (cmd_frames->parsed()) return run_frames(frames_key, depth);
    if (cmd_render->parsed()) {
      return run_render(render_key, render_max_bend, render_out, labels_name, draw_frame, width,
                        min_radius_text);
    }
    if (cmd_matrices->parsed()) return run_matrices();
  } catch (const StripUnsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
