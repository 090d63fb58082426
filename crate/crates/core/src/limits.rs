/// Environment variable overriding [`Limits::max_maps`].
pub const MAX_MAPS_ENV: &str = "HODIST_MAX_MAPS";

/// Size guards for enumerations. Exceeding one is an explicit error, never a
/// silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Most continuous maps (or homotopy search states) materialized at once.
    pub max_maps: usize,
    /// Most open sets enumerated for one space.
    pub max_opens: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_maps: 200_000, max_opens: 1 << 20 }
    }
}

impl Limits {
    /// Defaults, with `max_maps` taken from `HODIST_MAX_MAPS` when it parses.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var(MAX_MAPS_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            limits.max_maps = n;
        }
        limits
    }
}
