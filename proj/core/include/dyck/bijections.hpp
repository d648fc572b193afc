#pragma once

#include "dyck/colours.hpp"
#include "dyck/paths.hpp"
#include "dyck/structures.hpp"

namespace dyck {

/// Dyck paths of semilength n <-> non-crossing trees on n+1 vertices with
/// every non-root vertex of in-degree one. Scanning the path: each U opens a
/// pending edge at the current point; each D creates the next point clockwise,
/// moves there and closes the most recently opened pending edge.
NCOTree theta(const DyckPath& path);
DyckPath theta_inv(const NCOTree& tree);

/// Dyck paths with k-ascents coloured by Dyck paths of semilength k
/// <-> non-crossing trees on n+1 vertices. On a coloured pyramid the image is
/// theta of the colour; appended parts are inserted with their root at base
/// vertex i+1 and their remaining vertices clockwise between i and i+1.
NCTree phi(const ColouredDyckPath& path);
ColouredDyckPath phi_inv(const NCTree& tree);

/// Dyck paths of semilength n <-> non-crossing partitions of [n]. Each
/// maximal U^k followed by D opens a block of target size k at the next
/// point; every other D adds the next point to the most recently opened
/// incomplete block.
NonCrossingPartition psi(const DyckPath& path);
DyckPath psi_inv(const NonCrossingPartition& partition);

/// Dyck paths with ascents coloured by bounded-ascent paths <-> partitions of
/// 2n points into even non-crossing blocks of size <= 2m. On a pyramid the
/// image duplicates psi of the colour ({x...} -> {a_x, b_x, ...}); appended
/// parts are inserted clockwise between a_i and b_i.
EvenPartition rho(const ColouredDyckPath& path, int m);
/// Overload inferring the smallest admissible bound from the colours.
EvenPartition rho(const ColouredDyckPath& path);
ColouredDyckPath rho_inv(const EvenPartition& partition);

/// Dyck paths with ascents coloured by pyramid concatenations <-> dissections
/// of an (n+2)-gon into cells of 3..m+2 vertices. On a pyramid of size k the
/// image is the (k+2)-gon with diagonal (apex, j) for every interior axis
/// touch of the colour at x = 2j; the part appended at position i is inserted
/// with its apex at vertex i-1 and its last vertex at vertex i.
Dissection sigma(const ColouredDyckPath& path, int m);
Dissection sigma(const ColouredDyckPath& path);
ColouredDyckPath sigma_inv(const Dissection& dissection);

/// Dyck paths with ascents coloured by unrestricted pyramid concatenations
/// <-> little Schroeder paths of the same span. Each coloured pyramid of
/// size k with touch bits x_1..x_{k-1} (beta ones) rewrites to U^(beta+1)
/// followed by A_{k-1}..A_1 D with A_i = D if x_i = 1 else L, the j-th of
/// these letters followed by the rewritten j-th appended part.
LittleSchroederPath fib_to_ls(const ColouredDyckPath& path);
ColouredDyckPath ls_to_fib(const LittleSchroederPath& path);

/// Dyck paths with ascents coloured by Schroeder paths <-> paths to (3n, 0)
/// with steps H=(1,2), G=(2,1), D=(1,-1). Each ascent is replaced by its
/// rotated colour (U->H, L->G, D->D); base descents stay D. The inverse
/// matches every H with the nearest D to its right enclosing equally many
/// H's and D's; matched D's rotate back into colour descents.
TPath schroeder_to_t(const ColouredDyckPath& path);
ColouredDyckPath t_to_schroeder(const TPath& path);

} // namespace dyck
