#include "vrpsd/generate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "vrpsd/rng.hpp"

namespace vrpsd {

namespace {

struct Site {
  std::string id;
  double x = 0, y = 0;
};

Seconds travel_seconds(const Site& a, const Site& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return static_cast<Seconds>(std::llround(std::sqrt(dx * dx + dy * dy)));
}

const char* kServiceTypes[] = {"patrol", "inspection", "escort", "lockup"};

struct PlannedVisit {
  std::string id;
  int site = 0;             // index into sites
  std::string service;
  Seconds duration = 0;
  Seconds window_start = 0;
  Seconds window_end = 0;
};

bool attempt(const GenerateOptions& opt, std::uint64_t seed, Instance& out) {
  RngStream rng(seed);

  std::vector<Site> sites;
  sites.push_back({"DEPOT", 300.0, 300.0});  // depot is site 0
  auto new_site = [&]() {
    Site s;
    s.id = "L" + std::to_string(sites.size());
    s.x = rng.real01() * 600.0;
    s.y = rng.real01() * 600.0;
    sites.push_back(s);
    return static_cast<int>(sites.size() - 1);
  };

  InstanceConfig config;
  config.depot_id = "0";
  // staggered starts covering the day; late shifts spill past midnight
  const Seconds first_start = 21600;
  for (int s = 0; s < opt.shift_count; ++s) {
    config.shift_start_times.push_back(first_start + static_cast<Seconds>(s) * 7200);
  }

  std::vector<PlannedVisit> visits;
  std::vector<std::pair<int, std::string>> revisit_pool;  // (site, service)
  int id_counter = 10000;

  int remaining = opt.request_count;
  for (int s = 0; s < opt.shift_count; ++s) {
    const int shifts_left = opt.shift_count - s;
    const int count = (remaining + shifts_left - 1) / shifts_left;
    remaining -= count;

    Seconds ready = config.shift_start_times[static_cast<std::size_t>(s)] + kCheckIn;
    int prev_site = 0;
    std::string prev_service;
    const Seconds duration_budget = 40000;  // keep well under the 12 h limit

    for (int k = 0; k < count; ++k) {
      int site;
      std::string service;
      const bool revisit = !revisit_pool.empty() && rng.real01() < opt.revisit_share;
      if (revisit) {
        const auto& pick = revisit_pool[rng.below(revisit_pool.size())];
        site = pick.first;
        service = pick.second;
        if (site == prev_site && service == prev_service) {
          // would be back-to-back in the hidden schedule; use a fresh site
          site = new_site();
          service = kServiceTypes[rng.below(4)];
        }
      } else {
        site = new_site();
        service = kServiceTypes[rng.below(4)];
      }

      const Seconds travel = travel_seconds(sites[static_cast<std::size_t>(prev_site)],
                                            sites[static_cast<std::size_t>(site)]);
      Seconds duration = 180 + static_cast<Seconds>(rng.below(720));
      const Seconds downtime = rng.real01() < 0.3 ? static_cast<Seconds>(rng.below(600)) : 0;

      const Seconds arrival = ready + travel;
      const Seconds service_start = arrival + downtime;
      const Seconds completion = service_start + duration;
      const Seconds start = config.shift_start_times[static_cast<std::size_t>(s)];
      if (completion + travel_seconds(sites[static_cast<std::size_t>(site)], sites[0]) -
              start > duration_budget) {
        return false;  // unlucky draw blew the shift budget; retry with a new seed
      }

      PlannedVisit v;
      v.id = std::to_string(id_counter++);
      v.site = site;
      v.service = service;
      v.duration = duration;
      v.window_start = service_start - static_cast<Seconds>(rng.below(600));
      if (rng.real01() < opt.narrow_window_share) {
        v.window_end = completion + 60 + static_cast<Seconds>(rng.below(540));
      } else {
        v.window_end = completion + 600 + static_cast<Seconds>(rng.below(4800));
      }
      visits.push_back(std::move(v));
      revisit_pool.emplace_back(site, service);

      ready = completion;
      prev_site = site;
      prev_service = service;
    }
  }

  // matrix over depot + all visits
  std::vector<std::string> stop_ids;
  stop_ids.push_back(config.depot_id);
  for (const auto& v : visits) stop_ids.push_back(v.id);
  CostMatrix matrix(stop_ids, 0);

  auto site_of = [&](int stop) -> const Site& {
    return sites[stop == 0 ? 0 : static_cast<std::size_t>(visits[static_cast<std::size_t>(stop) - 1].site)];
  };
  const int n = matrix.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (i != 0 && j != 0) {
        const auto& vi = visits[static_cast<std::size_t>(i) - 1];
        const auto& vj = visits[static_cast<std::size_t>(j) - 1];
        if (vi.site == vj.site && vi.service == vj.service) {
          matrix.set_cost(i, j, 0);  // back-to-back marker
          matrix.set_back_to_back(i, j);
          continue;
        }
      }
      const Seconds service = j == 0 ? 0 : visits[static_cast<std::size_t>(j) - 1].duration;
      matrix.set_cost(i, j, travel_seconds(site_of(i), site_of(j)) + service);
    }
  }

  std::vector<Request> raw;
  raw.reserve(visits.size());
  for (const auto& v : visits) {
    Request r;
    r.id = v.id;
    r.site_id = sites[static_cast<std::size_t>(v.site)].id;
    r.service_type = v.service;
    r.service_duration = v.duration;
    r.window_start = v.window_start;
    r.window_end = v.window_end;
    raw.push_back(std::move(r));
  }

  out.config = std::move(config);
  out.matrix = std::move(matrix);
  out.requests = expand_multi_visits(std::move(raw));
  link_instance(out);

  // the hidden schedule must itself be feasible
  Solution truth;
  truth.shifts.resize(static_cast<std::size_t>(out.config.shift_count()));
  std::size_t cursor = 0;
  int rem = opt.request_count;
  for (int s = 0; s < out.config.shift_count(); ++s) {
    const int shifts_left = out.config.shift_count() - s;
    const int count = (rem + shifts_left - 1) / shifts_left;
    rem -= count;
    Shift& shift = truth.shifts[static_cast<std::size_t>(s)];
    shift.shift_id = "S" + std::to_string(s + 1);
    shift.start_time = out.config.shift_start_times[static_cast<std::size_t>(s)];
    for (int k = 0; k < count; ++k) shift.stops.push_back(static_cast<int>(cursor++));
    evaluate_shift_timing(shift, out.matrix, out.requests);
  }
  return count_violations(truth, out.matrix, out.requests).total() == 0;
}

}  // namespace

Instance generate_instance(const GenerateOptions& options) {
  if (options.request_count < 0 || options.shift_count < 1) {
    throw StructuralError("generator needs request_count >= 0 and shift_count >= 1");
  }
  for (std::uint64_t round = 0; round < 64; ++round) {
    Instance instance;
    if (attempt(options, options.seed + round * 0x9e3779b9ULL, instance)) return instance;
  }
  throw StructuralError("instance generation failed to converge");
}

}  // namespace vrpsd
