#include "vrpsd/ingest.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

namespace vrpsd {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  return out;
}

Seconds parse_seconds(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<Seconds>(v);
  } catch (const std::exception&) {
    throw LoadError(where + ": not an integer: '" + s + "'");
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path);
  return in;
}

}  // namespace

CostMatrix parse_cost_matrix(std::istream& in, const std::string& depot_id,
                             const std::string& context) {
  std::string line;
  if (!std::getline(in, line)) throw LoadError(context + ": empty matrix file");
  std::vector<std::string> header = split_csv(line);
  if (header.size() < 2) throw LoadError(context + ": header must list stop ids");
  std::vector<std::string> ids(header.begin() + 1, header.end());

  int depot = -1;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == depot_id) depot = static_cast<int>(i);
  }
  if (depot < 0) throw LoadError(context + ": unknown depot id '" + depot_id + "'");

  CostMatrix matrix(ids, depot);
  const int n = matrix.size();
  int row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_csv(line);
    if (row >= n) throw LoadError(context + ": more rows than header stops (not square)");
    if (static_cast<int>(cells.size()) != n + 1) {
      throw LoadError(context + ": row " + cells[0] + " has " +
                      std::to_string(cells.size() - 1) + " entries, expected " +
                      std::to_string(n));
    }
    if (cells[0] != ids[static_cast<std::size_t>(row)]) {
      throw LoadError(context + ": row order mismatch at '" + cells[0] + "', expected '" +
                      ids[static_cast<std::size_t>(row)] + "'");
    }
    for (int col = 0; col < n; ++col) {
      Seconds c = parse_seconds(cells[static_cast<std::size_t>(col) + 1],
                                context + ": row " + cells[0] + " col " + ids[static_cast<std::size_t>(col)]);
      if (c < 0) {
        throw LoadError(context + ": negative cost at row " + cells[0] + " col " +
                        ids[static_cast<std::size_t>(col)]);
      }
      matrix.set_cost(row, col, c);
    }
    ++row;
  }
  if (row != n) {
    throw LoadError(context + ": " + std::to_string(row) + " rows for " + std::to_string(n) +
                    " header stops (not square)");
  }
  for (int i = 0; i < n; ++i) {
    if (matrix.cost(i, i) != 0) {
      throw LoadError(context + ": nonzero diagonal at " + matrix.stop_id(i));
    }
  }
  // Table-1 semantics: a zero between distinct non-depot stops is a
  // back-to-back marker, symmetrized; the cost entry itself stays 0.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || i == depot || j == depot) continue;
      if (matrix.cost(i, j) == 0) matrix.set_back_to_back(i, j);
    }
  }
  return matrix;
}

CostMatrix load_cost_matrix(const std::string& path, const std::string& depot_id) {
  auto in = open_or_throw(path);
  return parse_cost_matrix(in, depot_id, path);
}

void write_cost_matrix(std::ostream& out, const CostMatrix& matrix) {
  out << "stop_id";
  for (const auto& id : matrix.stop_ids()) out << ',' << id;
  out << '\n';
  for (int i = 0; i < matrix.size(); ++i) {
    out << matrix.stop_id(i);
    for (int j = 0; j < matrix.size(); ++j) out << ',' << matrix.cost(i, j);
    out << '\n';
  }
}

RequestSet parse_requests(std::istream& in, const std::string& context) {
  std::vector<Request> raw;
  std::string line;
  Request current;
  bool open = false;
  int line_no = 0;

  auto finish = [&]() {
    if (!open) return;
    std::string where = context + ": request '" + current.id + "'";
    if (current.id.empty()) throw LoadError(where + ": missing id");
    if (current.site_id.empty()) throw LoadError(where + ": missing site");
    if (current.service_type.empty()) throw LoadError(where + ": missing service");
    if (current.service_duration <= 0) throw LoadError(where + ": missing or nonpositive duration");
    if (current.window_end <= current.window_start) {
      throw LoadError(where + ": window_end must exceed window_start");
    }
    raw.push_back(current);
    current = Request{};
    open = false;
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') {
      if (t.empty()) finish();
      continue;
    }
    std::istringstream ls(t);
    std::string key, value;
    ls >> key;
    std::getline(ls, value);
    value = trim(value);
    std::string where = context + ": line " + std::to_string(line_no);
    if (key == "request") {
      finish();
      open = true;
    } else if (!open) {
      throw LoadError(where + ": field outside a request block");
    } else if (key == "id") {
      current.id = value;
    } else if (key == "site") {
      current.site_id = value;
    } else if (key == "service") {
      current.service_type = value;
    } else if (key == "duration") {
      current.service_duration = parse_seconds(value, where);
    } else if (key == "window_start") {
      current.window_start = parse_seconds(value, where);
    } else if (key == "window_end") {
      current.window_end = parse_seconds(value, where);
    } else {
      throw LoadError(where + ": unknown key '" + key + "'");
    }
  }
  finish();

  try {
    return expand_multi_visits(std::move(raw));
  } catch (const StructuralError& e) {
    throw LoadError(context + ": " + e.what());
  }
}

RequestSet load_requests(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_requests(in, path);
}

void write_requests(std::ostream& out, const RequestSet& requests) {
  for (const auto& r : requests.items()) {
    out << "request\n"
        << "id " << r.id << '\n'
        << "site " << r.site_id << '\n'
        << "service " << r.service_type << '\n'
        << "duration " << r.service_duration << '\n'
        << "window_start " << r.window_start << '\n'
        << "window_end " << r.window_end << "\n\n";
  }
}

InstanceConfig parse_config(std::istream& in, const std::string& context) {
  InstanceConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    std::string key, value;
    ls >> key;
    std::getline(ls, value);
    value = trim(value);
    std::string where = context + ": line " + std::to_string(line_no);
    auto as_double = [&]() {
      try {
        return std::stod(value);
      } catch (const std::exception&) {
        throw LoadError(where + ": not a number: '" + value + "'");
      }
    };
    if (key == "depot") {
      cfg.depot_id = value;
    } else if (key == "shift_start") {
      cfg.shift_start_times.push_back(parse_seconds(value, where));
    } else if (key == "horizon") {
      cfg.horizon = parse_seconds(value, where);
    } else if (key == "setup_per_shift") {
      cfg.weights.setup_per_shift = as_double();
    } else if (key == "downtime_surcharge_factor") {
      cfg.weights.downtime_surcharge_factor = as_double();
    } else if (key == "penalty_per_deadline_miss") {
      cfg.weights.penalty_per_deadline_miss = as_double();
    } else if (key == "penalty_per_back_to_back") {
      cfg.weights.penalty_per_back_to_back = as_double();
    } else if (key == "penalty_per_overlong_shift") {
      cfg.weights.penalty_per_overlong_shift = as_double();
    } else if (key == "short_shift_penalty_per_second") {
      cfg.weights.short_shift_penalty_per_second = as_double();
    } else if (key == "short_shift_threshold") {
      cfg.weights.short_shift_threshold = parse_seconds(value, where);
    } else if (key == "dissimilarity_weight") {
      cfg.weights.dissimilarity_weight = as_double();
    } else if (key == "destroy_remove_count") {
      cfg.op_params.remove_count = static_cast<int>(parse_seconds(value, where));
    } else if (key == "regret_k") {
      cfg.op_params.regret_k = static_cast<int>(parse_seconds(value, where));
    } else if (key == "ta_fraction") {
      cfg.ta_fraction = as_double();
    } else if (key == "ta_iterations") {
      cfg.ta_iterations = static_cast<long>(parse_seconds(value, where));
    } else if (key == "ta_compare_to_current") {
      cfg.ta_compare_to_current = value == "1" || value == "true";
    } else if (key == "tabu_capacity") {
      cfg.tabu_capacity = static_cast<int>(parse_seconds(value, where));
    } else if (key == "long_arc_threshold") {
      cfg.long_arc_threshold = parse_seconds(value, where);
    } else if (key == "short_arc_threshold") {
      cfg.short_arc_threshold = parse_seconds(value, where);
    } else if (key == "ga_population") {
      cfg.ga_population = static_cast<int>(parse_seconds(value, where));
    } else if (key == "ga_mutation_rate") {
      cfg.ga_mutation_rate = as_double();
    } else {
      throw LoadError(where + ": unknown key '" + key + "'");
    }
  }
  if (cfg.depot_id.empty()) throw LoadError(context + ": missing depot id");
  if (cfg.shift_start_times.empty()) throw LoadError(context + ": at least one shift_start required");
  try {
    cfg.weights.validate(cfg.horizon, cfg.shift_count());
  } catch (const StructuralError& e) {
    throw LoadError(context + ": " + e.what());
  }
  return cfg;
}

InstanceConfig load_config(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_config(in, path);
}

void write_config(std::ostream& out, const InstanceConfig& cfg) {
  out << "depot " << cfg.depot_id << '\n';
  for (Seconds t : cfg.shift_start_times) out << "shift_start " << t << '\n';
  out << "horizon " << cfg.horizon << '\n';
}

void link_instance(Instance& instance) {
  std::string missing;
  for (std::size_t i = 0; i < instance.requests.size(); ++i) {
    Request& r = instance.requests[static_cast<int>(i)];
    r.matrix_index = instance.matrix.index_of(r.id);
    if (r.matrix_index < 0) {
      missing += missing.empty() ? r.id : (", " + r.id);
    } else {
      instance.matrix.set_service_duration(r.matrix_index, r.service_duration);
    }
  }
  if (!missing.empty()) {
    throw LoadError("request ids missing from the cost matrix: " + missing);
  }
  if (instance.config.shift_count() < 1) throw LoadError("shift_count must be at least 1");
}

Instance load_instance(const std::string& matrix_path, const std::string& requests_path,
                       const std::string& config_path) {
  Instance inst;
  inst.config = load_config(config_path);
  inst.matrix = load_cost_matrix(matrix_path, inst.config.depot_id);
  inst.requests = load_requests(requests_path);
  link_instance(inst);
  return inst;
}

}  // namespace vrpsd
