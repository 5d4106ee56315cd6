use crate::enumerate::DEFAULT_CAP;

/// Environment variable consulted for the default worker count.
pub const JOBS_ENV: &str = "TREERECON_JOBS";

/// Run settings shared by the index builders and verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest tree order the enumerator accepts.
    pub cap: usize,
    /// Worker threads; results never depend on this value.
    pub jobs: usize,
    /// Cross-check every accepted reconstruction candidate.
    pub checked: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config { cap: DEFAULT_CAP, jobs: 1, checked: false }
    }
}

impl Config {
    pub fn with_jobs(self, jobs: usize) -> Self {
        Config { jobs: jobs.max(1), ..self }
    }

    pub fn with_cap(self, cap: usize) -> Self {
        Config { cap: cap.max(1), ..self }
    }

    pub fn checked(self, checked: bool) -> Self {
        Config { checked, ..self }
    }
}
