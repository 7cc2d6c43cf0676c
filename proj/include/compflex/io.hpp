#pragma once

#include <ostream>
#include <span>
#include <string>

#include "compflex/montecarlo.hpp"
#include "compflex/scenario.hpp"

namespace compflex {

// All CSV floats use 9 significant digits.
std::string format_g9(double x);

const char* to_string(Scheme s);
const char* to_string(Direction d);
const char* to_string(LinkType t);

// `scheme,direction,beta_db,p_success,ci_low,ci_high,source,drops,seed`
void write_success_csv(std::ostream& os, std::span<const SuccessCurve> curves);

// `scheme,link_type,r_km,cdf` rows; assembled by the caller so empirical
// grids and analytic marker rows can share one file.
struct DistanceCdfRow {
  Scheme scheme = Scheme::CoMPflex;
  std::string link_type;
  double r_km = 0.0;
  double cdf = 0.0;
};
void write_distance_csv(std::ostream& os, std::span<const DistanceCdfRow> rows);

// `id,x_km,y_km`
void write_deployment_csv(std::ostream& os, const Deployment& dep);

// `bs_id,partner_id_or_-1,direction`
void write_pairing_csv(std::ostream& os, const PairedNetwork& net);

// `kind,id,x_km,y_km,direction,serving_bs`; FD base stations carry
// direction `fd`, BS rows use serving_bs -1.
void write_scenario_csv(std::ostream& os, const Scenario& sc);

}  // namespace compflex
