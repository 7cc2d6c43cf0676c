#include "compflex/io.hpp"

#include <cstdio>

namespace compflex {

std::string format_g9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

const char* to_string(Scheme s) { return s == Scheme::CoMPflex ? "compflex" : "fd"; }

const char* to_string(Direction d) { return d == Direction::UL ? "ul" : "dl"; }

const char* to_string(LinkType t) {
  switch (t) {
    case LinkType::UlSignal: return "ul_signal";
    case LinkType::DlSignal: return "dl_signal";
    case LinkType::IntraCellInterference: return "intra_cell_interference";
  }
  return "?";
}

void write_success_csv(std::ostream& os, std::span<const SuccessCurve> curves) {
  os << "scheme,direction,beta_db,p_success,ci_low,ci_high,source,drops,seed\n";
  for (const SuccessCurve& c : curves)
    for (const SuccessPoint& pt : c.points)
      os << to_string(c.scheme) << ',' << to_string(c.direction) << ','
         << format_g9(pt.beta_db) << ',' << format_g9(pt.p) << ','
         << format_g9(pt.ci_low) << ',' << format_g9(pt.ci_high) << ',' << c.source
         << ',' << c.drops_used << ',' << c.seed << '\n';
}

void write_distance_csv(std::ostream& os, std::span<const DistanceCdfRow> rows) {
  os << "scheme,link_type,r_km,cdf\n";
  for (const DistanceCdfRow& r : rows)
    os << to_string(r.scheme) << ',' << r.link_type << ',' << format_g9(r.r_km) << ','
       << format_g9(r.cdf) << '\n';
}

void write_deployment_csv(std::ostream& os, const Deployment& dep) {
  os << "id,x_km,y_km\n";
  for (std::size_t i = 0; i < dep.points.size(); ++i)
    os << i << ',' << format_g9(dep.points[i].x) << ',' << format_g9(dep.points[i].y)
       << '\n';
}

void write_pairing_csv(std::ostream& os, const PairedNetwork& net) {
  os << "bs_id,partner_id_or_-1,direction\n";
  for (std::size_t b = 0; b < net.partner.size(); ++b) {
    os << b << ',' << net.partner[b] << ',';
    os << (net.directions_assigned() ? to_string(net.direction[b]) : "unassigned");
    os << '\n';
  }
}

void write_scenario_csv(std::ostream& os, const Scenario& sc) {
  os << "kind,id,x_km,y_km,direction,serving_bs\n";
  for (std::size_t b = 0; b < sc.bs.points.size(); ++b) {
    const char* dir = sc.scheme == Scheme::FD
                          ? "fd"
                          : to_string(sc.pairing.direction[b]);
    os << "bs," << b << ',' << format_g9(sc.bs.points[b].x) << ','
       << format_g9(sc.bs.points[b].y) << ',' << dir << ",-1\n";
  }
  for (std::size_t m = 0; m < sc.ms.size(); ++m)
    os << "ms," << m << ',' << format_g9(sc.ms[m].pos.x) << ','
       << format_g9(sc.ms[m].pos.y) << ',' << to_string(sc.ms[m].dir) << ','
       << sc.ms[m].serving_bs << '\n';
}

}  // namespace compflex
