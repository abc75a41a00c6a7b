#ifndef MOTIVOL_RENDER_HPP
#define MOTIVOL_RENDER_HPP

#include "motivol/classical.hpp"
#include "motivol/tamagawa.hpp"

#include <string>

namespace motivol {

// stable textual forms: class functions as value vectors, Tate twists as
// powers of the Lefschetz symbol, tags by name
std::string to_string(const CohClass& c);
std::string to_string(const CohTail& t);  // descending u-exponents

std::string render_series_table(const TruncatedSeries<Rat>& s);
std::string render_tail_series_table(const CohTailSeries& s);

std::string render_volume_text(const VolumeReport& r, int digits);
std::string render_volume_json(const VolumeReport& r, int digits);

std::string render_motivic_text(const MotivicVolume& v);
std::string render_motivic_json(const MotivicVolume& v);

}  // namespace motivol

#endif
