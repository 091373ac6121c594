// Copyright 2026 The topo2d Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "topo2d/enumerate.hpp"
#include "topo2d/imageio.hpp"
#include "topo2d/skeleton.hpp"

namespace topo2d::cli {

namespace {

std::string pair_label(ConnPair pair) {
  return "(" + std::to_string(as_int(pair.n())) + "," + std::to_string(as_int(pair.n_bar())) + ")";
}

std::string number_label(Connectivity n, Phase phase) {
  return "T" + std::to_string(as_int(n)) + (phase == Phase::Object ? "(x,X)" : "(x,~X)");
}

// Loads a PBM, reporting failures on `err`. Empty on failure.
std::optional<BinaryImage> load_image(const std::filesystem::path& path, bool invert,
                                      std::ostream& err) {
  try {
    BinaryImage img = io::read_pbm(io::read_file(path));
    if (invert) img.invert();
    return img;
  } catch (const io::PbmParseError& e) {
    err << "error: " << path.string() << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return std::nullopt;
}

bool store(const std::filesystem::path& path, std::string_view bytes, std::ostream& err) {
  try {
    io::write_file(path, bytes);
    return true;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return false;
  }
}

void print_marginals(std::ostream& out) {
  out << "Topological numbers over all 256 configurations\n";
  out << std::left << std::setw(10) << "" << std::right;
  for (int k = 0; k <= enumerate::kMaxNumber; ++k) out << std::setw(6) << ("k=" + std::to_string(k));
  out << std::setw(6) << "k>4" << "\n";
  const std::pair<Connectivity, Phase> rows[] = {{Connectivity::Four, Phase::Object},
                                                 {Connectivity::Eight, Phase::Object},
                                                 {Connectivity::Eight, Phase::Complement},
                                                 {Connectivity::Four, Phase::Complement}};
  for (const auto& [n, phase] : rows) {
    const auto h = enumerate::marginal_histogram(n, phase);
    out << std::left << std::setw(10) << number_label(n, phase) << std::right;
    for (int c : h.counts) out << std::setw(6) << c;
    out << std::setw(6) << h.overflow << "\n";
  }
}

void print_joint(std::ostream& out, ConnPair pair) {
  const auto h = enumerate::joint_histogram(pair);
  out << "Joint counts for (n,n_bar)=" << pair_label(pair)
      << ": rows T_n(x,X)=k, columns T_nbar(x,~X)=k'\n";
  out << std::setw(6) << "";
  for (int kb = 0; kb <= enumerate::kMaxNumber; ++kb) out << std::setw(6) << ("k'=" + std::to_string(kb));
  out << "\n";
  for (int k = 0; k <= enumerate::kMaxNumber; ++k) {
    out << std::left << std::setw(6) << ("k=" + std::to_string(k)) << std::right;
    for (int c : h.counts[k]) out << std::setw(6) << c;
    out << "\n";
  }
  out << "total: " << h.total() << "\n";
}

void print_joint_csv(std::ostream& out, ConnPair pair) {
  const auto h = enumerate::joint_histogram(pair);
  for (int k = 0; k <= enumerate::kMaxNumber; ++k) {
    for (int kb = 0; kb <= enumerate::kMaxNumber; ++kb) {
      out << as_int(pair.n()) << "," << as_int(pair.n_bar()) << "," << k << "," << kb << ","
          << h.counts[k][kb] << "\n";
    }
  }
}

}  // namespace

int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err) {
  auto img = load_image(args.input, args.invert, err);
  if (!img) return kExitInput;

  io::Palette palette = io::Palette::defaults();
  if (args.palette) {
    try {
      palette = io::Palette::parse(io::read_file(*args.palette));
    } catch (const std::exception& e) {
      err << "error: " << args.palette->string() << ": " << e.what() << "\n";
      return kExitInput;
    }
  }

  const ClassMap map = classify_image(*img, args.pair);
  if (!store(args.output, io::render_classification(map, palette), err)) return kExitWrite;

  const auto census = map.census();
  for (PointClass c : kAllPointClasses) {
    out << class_name(c) << ": " << census[static_cast<std::size_t>(c)] << "\n";
  }
  return kExitOk;
}

int cmd_tables(std::optional<ConnPair> pair, bool csv, std::ostream& out) {
  std::vector<ConnPair> pairs;
  if (pair) {
    pairs.push_back(*pair);
  } else {
    pairs.assign(std::begin(kBothPairs), std::end(kBothPairs));
  }

  if (csv) {
    out << "n,n_bar,k,k_bar,count\n";
    for (ConnPair p : pairs) print_joint_csv(out, p);
    return kExitOk;
  }

  print_marginals(out);
  for (ConnPair p : pairs) {
    out << "\n";
    print_joint(out, p);
  }
  return kExitOk;
}

int cmd_verify(const LocalTables& tables, std::ostream& out, std::ostream& err) {
  bool all_ok = true;
  auto line = [&](const std::string& name, bool ok, const std::string& detail = {}) {
    out << name << ": " << (ok ? "PASS" : "FAIL") << detail << "\n";
    all_ok = all_ok && ok;
  };

  for (Connectivity n : {Connectivity::Four, Connectivity::Eight}) {
    for (Phase phase : {Phase::Object, Phase::Complement}) {
      line("marginal " + number_label(n, phase),
           enumerate::marginal_histogram(n, phase, tables) == enumerate::reference_marginal(n, phase));
    }
  }
  for (ConnPair pair : kBothPairs) {
    line("joint " + pair_label(pair),
         enumerate::joint_histogram(pair, tables) == enumerate::reference_joint(pair));
  }
  for (ConnPair pair : kBothPairs) {
    try {
      line("class census " + pair_label(pair),
           enumerate::class_census(pair, tables) == enumerate::reference_census(pair));
    } catch (const TopologyFault& e) {
      line("class census " + pair_label(pair), false, std::string(" (") + e.what() + ")");
    }
  }

  const auto report = enumerate::verify_local_characterization(tables);
  line("local simple-point characterization", report.ok(),
       " (" + std::to_string(report.agreeing) + "/" + std::to_string(report.cases) + ")");
  if (!report.ok()) {
    err << "counterexample masks:";
    for (int m : report.offending_masks()) err << " " << m;
    err << "\n";
  }
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_config(int mask, ConnPair pair, std::ostream& out, std::ostream& err) {
  if (mask < 0 || mask > 255) {
    err << "error: mask must be in 0..255, got " << mask << "\n";
    return kExitInput;
  }
  const Config c{static_cast<std::uint8_t>(mask)};
  out << "mask " << mask << "\n";
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) {
        out << 'x';
        continue;
      }
      for (int k = 0; k < 8; ++k) {
        if (kNeighborOffsets[k] == Point{dx, dy}) out << (c.black(k) ? '#' : '.');
      }
    }
    out << "\n";
  }
  for (Phase phase : {Phase::Object, Phase::Complement}) {
    for (Connectivity n : {Connectivity::Four, Connectivity::Eight}) {
      out << number_label(n, phase) << "=" << topological_number(c, n, phase) << "\n";
    }
  }
  const TopoPair tp = topo_pair(c, pair);
  out << "pair " << pair_label(pair) << ": class " << class_label(classify(c, pair)) << ", T=("
      << tp.t << "," << tp.t_bar << ")" << (is_curve_end(c, pair) ? ", curve end" : "") << "\n";
  return kExitOk;
}

int cmd_skeletonize(const SkeletonizeArgs& args, std::ostream& out, std::ostream& err) {
  auto img = load_image(args.input, args.invert, err);
  if (!img) return kExitInput;

  const SkeletonResult result =
      skeletonize(*img, args.pair, {args.preserve_curve_ends, args.max_iters});
  if (!store(args.output, io::write_pbm(result.image), err)) return kExitWrite;

  out << "iterations: " << result.iterations << "\n";
  out << "deleted: " << result.deleted << "\n";
  if (!result.converged) {
    err << "error: no fixpoint after " << args.max_iters << " passes\n";
    return kExitNoFixpoint;
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological classification of points in 2D binary images"};
  app.require_subcommand(1);

  const std::map<std::string, Connectivity> conn_map{{"4", Connectivity::Four},
                                                     {"8", Connectivity::Eight}};
  auto add_connectivity = [&](CLI::App* sub, Connectivity& target) {
    return sub->add_option("--connectivity", target, "object connectivity; complement uses the dual")
        ->transform(CLI::CheckedTransformer(conn_map));
  };

  ClassifyArgs classify_args;
  Connectivity classify_conn = Connectivity::Eight;
  std::string palette_path;
  auto* classify = app.add_subcommand("classify", "write a colour-coded class map (PPM)");
  classify->add_option("input", classify_args.input, "input PBM")->required();
  classify->add_option("-o", classify_args.output, "output PPM")->required();
  add_connectivity(classify, classify_conn);
  classify->add_flag("--invert", classify_args.invert, "treat 0 bits as the object");
  classify->add_option("--palette", palette_path, "palette file: <ClassName> <r> <g> <b> lines");

  Connectivity tables_conn = Connectivity::Eight;
  bool csv = false;
  auto* tables = app.add_subcommand("tables", "print configuration counts");
  auto* tables_conn_opt = add_connectivity(tables, tables_conn);
  tables->add_flag("--csv", csv, "emit joint counts as CSV");

  auto* verify = app.add_subcommand("verify", "check the local tables exhaustively");

  int mask = 0;
  Connectivity config_conn = Connectivity::Eight;
  auto* config = app.add_subcommand("config", "describe one configuration mask");
  config->add_option("mask", mask, "configuration mask 0..255")->required();
  add_connectivity(config, config_conn);

  SkeletonizeArgs skel_args;
  Connectivity skel_conn = Connectivity::Eight;
  auto* skel = app.add_subcommand("skeletonize", "delete simple points until none remain");
  skel->add_option("input", skel_args.input, "input PBM")->required();
  skel->add_option("-o", skel_args.output, "output PBM")->required();
  add_connectivity(skel, skel_conn);
  skel->add_flag("--invert", skel_args.invert, "treat 0 bits as the object");
  skel->add_flag("--preserve-curve-ends", skel_args.preserve_curve_ends, "keep curve-end points");
  skel->add_option("--max-iters", skel_args.max_iters, "pass limit")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*classify) {
    classify_args.pair = ConnPair(classify_conn);
    if (!palette_path.empty()) classify_args.palette = palette_path;
    return cmd_classify(classify_args, out, err);
  }
  if (*tables) {
    std::optional<ConnPair> pair;
    if (tables_conn_opt->count() > 0) pair = ConnPair(tables_conn);
    return cmd_tables(pair, csv, out);
  }
  if (*verify) return cmd_verify(LocalTables::standard(), out, err);
  if (*config) return cmd_config(mask, ConnPair(config_conn), out, err);
  skel_args.pair = ConnPair(skel_conn);
  return cmd_skeletonize(skel_args, out, err);
}

}  // namespace topo2d::cli
