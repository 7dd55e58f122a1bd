// Copyright 2026 The polysimp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "polysimp/io.hpp"
#include "polysimp/metrics.hpp"
#include "polysimp/rdp.hpp"
#include "polysimp/simplify.hpp"
#include "polysimp/validity.hpp"

namespace polysimp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

SimplifyParams make_params(const CliConfig& config)
{
  if (!config.tau)
    throw UsageError("--tau is required");
  SimplifyParams params;
  params.tau = *config.tau;
  params.epsilon = config.epsilon;
  params.delta = config.delta;
  params.legacy_translate_sign = config.legacy_translate_sign;
  if (config.gamma == "dynamic") {
    params.gamma = GammaPolicy::current_length();
  } else {
    try {
      std::size_t used = 0;
      params.gamma = GammaPolicy::fixed(std::stod(config.gamma, &used));
      if (used != config.gamma.size())
        throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("--gamma must be a number or 'dynamic', got '" + config.gamma + "'");
    }
  }
  try {
    params.validate();
  } catch (const GeometryError& e) {
    throw UsageError(e.what());
  }
  return params;
}

ReadResult load(const CliConfig& config, Streams io)
{
  Format format;
  try {
    format = parse_format(config.input_format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  ReadResult result;
  if (config.input == "-") {
    result = read_features(io.in, format);
  } else {
    std::ifstream file(config.input, std::ios::binary);
    if (!file)
      throw IoError("cannot open input '" + config.input + "'");
    result = read_features(file, format);
  }
  if (result.skipped)
    io.err << "warning: skipped " << result.skipped << " non-areal or empty geometries\n";
  return result;
}

void emit(const std::string& path, Streams io, const std::function<void(std::ostream&)>& write)
{
  if (path == "-") {
    write(io.out);
    io.out.flush();
    if (!io.out)
      throw IoError("failed to write to standard output");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw IoError("cannot open output '" + path + "'");
  write(file);
  file.flush();
  if (!file)
    throw IoError("failed to write '" + path + "'");
}

template <typename R, typename F>
std::vector<R> parallel_map(std::size_t count, F&& fn)
{
  std::vector<std::optional<R>> slots(count);
  const unsigned workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      slots[i].emplace(fn(i));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < count; i = next++)
            slots[i].emplace(fn(i));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (const auto& e : errors) {
      if (e)
        std::rethrow_exception(e);
    }
  }
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots)
    out.push_back(std::move(*s));
  return out;
}

struct RingOutcome
{
  std::string role;
  SimplifyReport simplify;
  QualityReport quality;
  std::optional<std::size_t> self_intersections;
};

struct FeatureOutcome
{
  FeatureRecord record;
  std::vector<RingOutcome> rings;
};

FeatureOutcome simplify_feature(const FeatureRecord& input, const SimplifyParams& params,
                                bool check_validity)
{
  FeatureOutcome out{input, {}};
  if (!input.geometry)
    return out;
  const Polygon& polygon = *input.geometry;
  const PolygonResult result = simplify_polygon(polygon, params);

  auto outcome = [&](const std::string& role, const Ring& before, const SimplifyReport& report,
                     const std::optional<Ring>& after) {
    RingOutcome r{role, report, quality_report(before, after), std::nullopt};
    if (check_validity && after)
      r.self_intersections = self_intersections(*after).size();
    return r;
  };

  if (!result.polygon) {
    out.record.geometry.reset();
    out.rings.push_back(outcome("exterior", polygon.exterior, result.exterior, std::nullopt));
    return out;
  }
  out.record.geometry = result.polygon;
  out.rings.push_back(outcome("exterior", polygon.exterior, result.exterior,
                              result.polygon->exterior));
  std::size_t kept = 0;
  for (std::size_t i = 0; i < polygon.holes.size(); ++i) {
    std::optional<Ring> after;
    if (!result.holes[i].vanished)
      after = result.polygon->holes[kept++];
    out.rings.push_back(outcome("hole", polygon.holes[i], result.holes[i], after));
  }
  return out;
}

Json to_json(const SimplifyReport& r)
{
  return Json{{"collinear_merges", r.collinear_merges},
              {"regressions", r.regressions},
              {"translations", r.translations},
              {"joins", r.joins},
              {"remove_middle_points", r.remove_middle_points},
              {"fallback_skips", r.fallback_skips},
              {"stale_dequeues", r.stale_dequeues},
              {"dequeues", r.dequeues},
              {"cleanup_removals", r.cleanup_removals},
              {"budget_exhausted", r.budget_exhausted},
              {"vanished", r.vanished},
              {"initial_vertices", r.initial_vertices},
              {"final_vertices", r.final_vertices}};
}

Json to_json(const QualityReport& q)
{
  return Json{{"segment_count_before", q.segment_count_before},
              {"segment_count_after", q.segment_count_after},
              {"area_before", q.area_before},
              {"area_after", q.area_after},
              {"hausdorff", q.hausdorff},
              {"right_angle_fraction_before", q.right_angle_fraction_before},
              {"right_angle_fraction_after", q.right_angle_fraction_after},
              {"vanished", q.vanished}};
}

std::string id_text(const FeatureRecord& r, std::size_t index)
{
  if (r.id.is_string())
    return r.id.get<std::string>();
  if (r.id.is_null())
    return std::to_string(index);
  return r.id.dump();
}

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n\r") == std::string::npos)
    return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<FeatureOutcome> simplify_all(const std::vector<FeatureRecord>& records,
                                         const SimplifyParams& params, bool check_validity)
{
  return parallel_map<FeatureOutcome>(records.size(), [&](std::size_t i) {
    return simplify_feature(records[i], params, check_validity);
  });
}

double polygon_area(const Polygon& polygon)
{
  double area = ring_area_and_orientation(polygon.exterior).area;
  for (const auto& hole : polygon.holes)
    area -= ring_area_and_orientation(hole).area;
  return area;
}

int guarded(Streams io, const std::function<int()>& body)
{
  try {
    return body();
  } catch (const UsageError& e) {
    io.err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    io.err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    io.err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const GeometryError& e) {
    io.err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidParams ? kExitUsage : kExitIo;
  }
}

}  // namespace

unsigned worker_count()
{
  if (const char* env = std::getenv("SIMPLIFY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 0)
      return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_simplify(const CliConfig& config, Streams io)
{
  return guarded(io, [&] {
    const SimplifyParams params = make_params(config);
    const Format out_format =
      config.output_format.empty() ? Format::GeoJson : parse_format(config.output_format);
    if (out_format == Format::Auto)
      throw UsageError("output format must be geojson or wkt");

    const ReadResult input = load(config, io);
    const auto outcomes = simplify_all(input.records, params, config.check_validity);

    std::vector<FeatureRecord> records;
    records.reserve(outcomes.size());
    for (const auto& o : outcomes)
      records.push_back(o.record);

    emit(config.output, io, [&](std::ostream& out) {
      const WriteResult w = write_features(records, out_format, out);
      if (w.skipped)
        io.err << "warning: " << w.skipped << " vanished feature(s) omitted from WKT output\n";
    });

    std::size_t invalid = 0;
    for (const auto& o : outcomes)
      for (const auto& r : o.rings)
        invalid += r.self_intersections.value_or(0) > 0;
    if (config.check_validity && invalid)
      io.err << "warning: " << invalid << " output ring(s) self-intersect\n";

    if (!config.report.empty()) {
      Json report = Json::array();
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        Json rings = Json::array();
        for (const auto& r : o.rings) {
          Json entry{{"role", r.role}, {"simplify", to_json(r.simplify)}, {"quality", to_json(r.quality)}};
          if (r.self_intersections)
            entry["self_intersections"] = *r.self_intersections;
          rings.push_back(std::move(entry));
        }
        report.push_back(Json{{"id", id_text(o.record, i)},
                              {"vanished", input.records[i].geometry && !o.record.geometry},
                              {"rings", std::move(rings)}});
      }
      emit(config.report, io, [&](std::ostream& out) { out << report.dump(2) << '\n'; });
    }
    return kExitOk;
  });
}

int cmd_sweep(const CliConfig& config, Streams io)
{
  return guarded(io, [&] {
    if (!(config.sweep_step > 0) || !std::isfinite(config.sweep_step))
      throw UsageError("--step must be > 0");
    if (!(config.sweep_from >= 0) || !(config.sweep_to >= config.sweep_from))
      throw UsageError("sweep range must satisfy 0 <= from <= to");
    CliConfig base = config;
    base.tau = config.sweep_from;
    make_params(base);

    const ReadResult input = load(config, io);
    std::vector<SweepRow> rows;
    const double slack = 1e-9 * config.sweep_step;
    for (std::size_t k = 0; !input.records.empty(); ++k) {
      const double tau = config.sweep_from + static_cast<double>(k) * config.sweep_step;
      if (tau > config.sweep_to + slack)
        break;
      base.tau = tau;
      const auto outcomes = simplify_all(input.records, make_params(base), false);
      SweepRow row{tau, 0, 0, 0.0, 0.0};
      std::vector<FeatureRecord> after;
      for (const auto& o : outcomes) {
        after.push_back(o.record);
        if (o.record.geometry) {
          std::size_t n = o.record.geometry->exterior.size();
          for (const auto& h : o.record.geometry->holes)
            n += h.size();
          row.segments += n;
          row.vertices += n;
          row.area += polygon_area(*o.record.geometry);
        }
        if (!o.rings.empty())
          row.hausdorff = std::max(row.hausdorff, o.rings.front().quality.hausdorff);
      }
      rows.push_back(row);

      if (!config.svg.empty() && !input.records.empty()) {
        SvgOptions options;
        options.title = "tau = " + format_number(tau);
        const std::string svg = render_svg(input.records, after, options);
        emit(config.svg + "-tau" + format_number(tau) + ".svg", io,
             [&](std::ostream& out) { out << svg; });
      }
    }
    emit(config.output, io, [&](std::ostream& out) { write_sweep_csv(rows, out); });
    return kExitOk;
  });
}

int cmd_compare(const CliConfig& config, Streams io)
{
  return guarded(io, [&] {
    if (!config.tau)
      throw UsageError("--tau is required");
    if (!config.rdp_tolerance)
      throw UsageError("--rdp-tolerance is required");
    if (!(*config.rdp_tolerance >= 0))
      throw UsageError("--rdp-tolerance must be >= 0");
    const SimplifyParams params = make_params(config);
    const std::string format = config.output_format.empty() ? "csv" : config.output_format;
    if (format != "csv" && format != "json")
      throw UsageError("compare output format must be csv or json");

    const ReadResult input = load(config, io);
    const auto engine = simplify_all(input.records, params, false);
    const RdpParams rdp_params{*config.rdp_tolerance};

    std::vector<FeatureRecord> rdp_records;
    std::vector<std::optional<QualityReport>> rdp_quality;
    for (const auto& r : input.records) {
      FeatureRecord out = r;
      if (!r.geometry) {
        rdp_records.push_back(out);
        rdp_quality.emplace_back();
        continue;
      }
      auto exterior = rdp_ring(r.geometry->exterior, rdp_params);
      rdp_quality.emplace_back(quality_report(r.geometry->exterior, exterior));
      if (!exterior) {
        out.geometry.reset();
      } else {
        Polygon polygon{std::move(*exterior), {}};
        for (const auto& hole : r.geometry->holes) {
          if (auto h = rdp_ring(hole, rdp_params))
            polygon.holes.push_back(std::move(*h));
        }
        out.geometry = std::move(polygon);
      }
      rdp_records.push_back(std::move(out));
    }

    emit(config.output, io, [&](std::ostream& out) {
      if (format == "json") {
        Json doc = Json::array();
        for (std::size_t i = 0; i < input.records.size(); ++i) {
          if (!input.records[i].geometry)
            continue;
          doc.push_back(Json{{"id", id_text(input.records[i], i)},
                             {"engine", to_json(engine[i].rings.front().quality)},
                             {"rdp", to_json(*rdp_quality[i])}});
        }
        out << doc.dump(2) << '\n';
        return;
      }
      out << "id,method,segments_before,segments_after,area_before,area_after,hausdorff,"
             "right_angle_fraction_before,right_angle_fraction_after,vanished\n";
      auto row = [&](const std::string& id, const char* method, const QualityReport& q) {
        out << csv_field(id) << ',' << method << ',' << q.segment_count_before << ','
            << q.segment_count_after << ',' << format_number(q.area_before) << ','
            << format_number(q.area_after) << ',' << format_number(q.hausdorff) << ','
            << format_number(q.right_angle_fraction_before) << ','
            << format_number(q.right_angle_fraction_after) << ',' << (q.vanished ? 1 : 0) << '\n';
      };
      for (std::size_t i = 0; i < input.records.size(); ++i) {
        if (!input.records[i].geometry)
          continue;
        const std::string id = id_text(input.records[i], i);
        row(id, "engine", engine[i].rings.front().quality);
        row(id, "rdp", *rdp_quality[i]);
      }
    });

    if (!config.svg.empty()) {
      std::vector<FeatureRecord> engine_records;
      for (const auto& o : engine)
        engine_records.push_back(o.record);
      const std::vector<SvgPanel> panels{
        {"original", &input.records, nullptr},
        {"simplified (tau = " + format_number(*config.tau) + ")", &input.records, &engine_records},
        {"RDP (tolerance = " + format_number(*config.rdp_tolerance) + ")", &input.records,
         &rdp_records}};
      const std::string svg = render_svg_panels(panels);
      emit(config.svg, io, [&](std::ostream& out) { out << svg; });
    }
    return kExitOk;
  });
}

int cmd_render(const CliConfig& config, Streams io)
{
  return guarded(io, [&] {
    std::optional<SimplifyParams> params;
    if (config.tau)
      params = make_params(config);
    const ReadResult input = load(config, io);
    std::vector<FeatureRecord> after;
    if (params) {
      for (const auto& o : simplify_all(input.records, *params, false))
        after.push_back(o.record);
    }
    const std::string svg = render_svg(input.records, after);
    emit(config.output, io, [&](std::ostream& out) { out << svg; });
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, Streams io)
{
  CLI::App app{"Polygon footprint simplification", "polysimp"};
  app.require_subcommand(1);
  CliConfig config;

  auto common = [&config](CLI::App* sub) {
    sub->add_option("-i,--input", config.input, "input file, '-' for stdin")->capture_default_str();
    sub->add_option("-o,--output", config.output, "output file, '-' for stdout")->capture_default_str();
    sub->add_option("--format", config.input_format, "input format: auto|geojson|wkt")
      ->capture_default_str();
    sub->add_option("--epsilon", config.epsilon, "angle threshold (radians)")->capture_default_str();
    sub->add_option("--delta", config.delta, "collinearity threshold (radians)")->capture_default_str();
    sub->add_option("--gamma", config.gamma, "joining distance: number or 'dynamic'")
      ->capture_default_str();
    sub->add_flag("--legacy-translate-sign", config.legacy_translate_sign,
                  "use p_k - vec(s_{k+1}) in the translate case with a shorter successor");
  };
  auto tau_option = [&config](CLI::App* sub) {
    return sub->add_option_function<double>(
      "--tau", [&config](double v) { config.tau = v; }, "distance threshold");
  };

  auto* simplify = app.add_subcommand("simplify", "simplify every feature");
  common(simplify);
  tau_option(simplify);
  simplify->add_option("--output-format", config.output_format, "geojson|wkt");
  simplify->add_option("--report", config.report, "write a JSON report to this path");
  simplify->add_flag("--check-validity", config.check_validity, "report self-intersections");

  auto* sweep = app.add_subcommand("sweep", "simplify over a range of tau and tabulate");
  common(sweep);
  sweep->add_option("--from", config.sweep_from, "first tau")->required();
  sweep->add_option("--to", config.sweep_to, "last tau")->required();
  sweep->add_option("--step", config.sweep_step, "tau increment")->required();
  sweep->add_option("--svg", config.svg, "write one SVG per tau using this path prefix");

  auto* compare = app.add_subcommand("compare", "compare the simplifier with RDP");
  common(compare);
  tau_option(compare);
  compare->add_option_function<double>(
    "--rdp-tolerance", [&config](double v) { config.rdp_tolerance = v; }, "RDP tolerance");
  compare->add_option("--output-format", config.output_format, "csv|json");
  compare->add_option("--svg", config.svg, "write a three-panel SVG");

  auto* render = app.add_subcommand("render", "render input (and a simplified overlay) to SVG");
  common(render);
  tau_option(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, io.out, io.err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, io.out, io.err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, io.out, io.err);
    return kExitUsage;
  }

  if (simplify->parsed())
    return cmd_simplify(config, io);
  if (sweep->parsed())
    return cmd_sweep(config, io);
  if (compare->parsed())
    return cmd_compare(config, io);
  return cmd_render(config, io);
}

}  // namespace polysimp::cli
