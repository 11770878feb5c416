//! Listings of the combinatorial families.

use cha_combinatorics::{binary, perm, planar, rooted, series_parallel, unreduced};
use cha_core::{Error, Result};

pub const FAMILIES: &[&str] = &["pt", "pbt", "put", "ut", "perm", "sp-poset"];

/// Sizes above these are refused whatever `--maxdeg` says.
fn hard_limit(family: &str) -> usize {
    match family {
        "pt" | "put" => 9,
        "pbt" => 12,
        "ut" => 10,
        "perm" => 8,
        _ => 5,
    }
}

/// Canonical serializations of every element of size `n`: leaves for the
/// planar families, vertices for the unreduced and rooted trees, points for
/// posets. `connected` keeps irreducible permutations and connected posets.
pub fn enumerate(family: &str, n: usize, connected: bool, bound: usize) -> Result<Vec<String>> {
    if !FAMILIES.contains(&family) {
        return Err(Error::invalid(format!("unknown family `{family}`; known: {}", FAMILIES.join(", "))));
    }
    cha_core::error::check_bound(n, bound.min(hard_limit(family)))?;
    if connected && !matches!(family, "perm" | "sp-poset") {
        return Err(Error::invalid("--connected applies to perm and sp-poset"));
    }
    match family {
        "pt" => Ok(planar::enumerate(n).iter().map(ToString::to_string).collect()),
        "pbt" => Ok(binary::enumerate(n).iter().map(ToString::to_string).collect()),
        "put" => Ok(unreduced::enumerate(n).iter().map(ToString::to_string).collect()),
        "ut" => Ok(rooted::enumerate(n).iter().map(ToString::to_string).collect()),
        "perm" => {
            let ps = if connected { perm::irreducibles(n) } else { perm::enumerate(n) };
            Ok(ps.iter().map(ToString::to_string).collect())
        }
        _ => Ok(series_parallel::posets(n, connected).iter().map(|p| series_parallel::format_poset(p)).collect()),
    }
}
