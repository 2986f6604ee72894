#ifndef EQUICONES_CHART_HPP
#define EQUICONES_CHART_HPP

#include <string>
#include <vector>

#include "equicones/barss.hpp"
#include "equicones/graded_module.hpp"

namespace equicones {

/* A drawable arrow between summand apexes. */
struct ChartArrow {
    BiDegree from{};
    BiDegree to{};
    std::string label;
};

/* Ascii rendering: p horizontal, q vertical (top = q_max). Cones draw with
 * 'o' apexes, '|' vertical and '\' diagonal edges; towers draw as a full
 * column. Lossy but diffable. */
std::string ascii_chart(const GradedModule& m, Region region,
                        const std::vector<ChartArrow>& arrows = {});

/* Svg rendering with the source JSON embedded as metadata so the chart is
 * self-describing. */
std::string svg_chart(const GradedModule& m, Region region, const std::string& source_json,
                      const std::vector<ChartArrow>& arrows = {});

/* Extract the JSON block embedded by svg_chart. */
std::string svg_embedded_json(const std::string& svg);

GradedModule page_module(const Page& page);
std::vector<ChartArrow> page_arrows(const Page& page);

}  // namespace equicones

#endif
