#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ptrans/scenario.hpp"

namespace ptrans {

/// Bundled parameter sets. fig3..fig6 are single-junction resonance-condition
/// studies (curves of tan(ka) and f(k) plus the crossing list for the
/// symmetric double barrier they induce); fig7/fig8 are full double-barrier
/// transmission scans with the corresponding root list.
///   fig3: L1 = ( 1.0,  0.5)   sum > 0, product > 0
///   fig4: L1 = (-1.0, -0.5)   sum < 0, product > 0
///   fig5: L1 = ( 5.0, -0.5)   sum > 0, product < 0
///   fig6: L1 = (-5.0,  0.5)   sum < 0, product < 0
///   fig7: L1 = L2 = (1.0, 0.5), a = 1
///   fig8: L1 = (2.0, -1.0), L2 = (-2.0, 1.0), a = 1
std::vector<std::string> preset_names();

bool is_preset(const std::string& name);

/// Writes <name>_curves.csv, <name>_roots.csv and <name>.gp into out_dir and
/// returns the paths written.
std::vector<std::filesystem::path> run_preset(const std::string& name,
                                              const std::filesystem::path& out_dir);

} // namespace ptrans
