//! Verification run configuration: which ranks, charts, and suites to
//! exercise, at which sampling effort, from which seed.

/// One of the six verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    /// Tableau-level checks: promotion order, crystal operator axioms,
    /// evacuation as rotation, and the pinned worked examples.
    Combinatorial,
    /// The decorated geometric crystal on Gr(k,n) x C^*: structure-function
    /// relations, action laws, decoration cocycle, cyclic-shift behaviour.
    Geometric,
    /// The rational rectangle charts: positive minor formulas, birational
    /// roundtrips, planar-network transfer matrices, monomial coordinates.
    Parametrization,
    /// The tropicalized chart maps against the combinatorial crystal, plus
    /// the min-plus evaluation oracle.
    Tropical,
    /// The matrix realization in the loop group: factorization shape,
    /// determinant, intertwining, character, companion inverse.
    Loopgroup,
    /// The involution and duality symmetries, their matrix comparisons,
    /// and the operator conjugation laws on tableaux.
    Symmetry,
}

impl Suite {
    /// Every suite, in the canonical report order.
    pub const ALL: [Suite; 6] = [
        Suite::Combinatorial,
        Suite::Geometric,
        Suite::Parametrization,
        Suite::Tropical,
        Suite::Loopgroup,
        Suite::Symmetry,
    ];

    /// The stable name used in the CLI, the JSON report, and the RNG
    /// substream derivation.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Combinatorial => "combinatorial",
            Suite::Geometric => "geometric",
            Suite::Parametrization => "parametrization",
            Suite::Tropical => "tropical",
            Suite::Loopgroup => "loopgroup",
            Suite::Symmetry => "symmetry",
        }
    }

    /// Parse a CLI suite token.
    pub fn parse(token: &str) -> Result<Suite, String> {
        Suite::ALL
            .iter()
            .copied()
            .find(|s| s.name() == token)
            .ok_or_else(|| {
                format!(
                    "unknown suite `{token}` (expected one of: {})",
                    Suite::ALL.map(|s| s.name()).join(", ")
                )
            })
    }

    /// The largest rank this suite will exercise even when the configured
    /// range goes higher. Exhaustive enumerations (tropical boxes, tableau
    /// crystals) and dense random sampling stay at desk scale up to rank 5;
    /// the chart-minor formulas stay cheap up to rank 6.
    pub(crate) fn n_cap(self) -> usize {
        match self {
            Suite::Combinatorial | Suite::Parametrization => 6,
            Suite::Geometric | Suite::Tropical | Suite::Loopgroup | Suite::Symmetry => 5,
        }
    }
}

/// Configuration for one `verify` run.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Ranks to exercise; validated to lie in `[2, 6]`.
    pub n_range: Vec<usize>,
    /// Charts to exercise at each rank: `None` means every `k` in
    /// `1..n`, `Some(list)` restricts to the listed values (those `>= n`
    /// are skipped at that rank).
    pub k_list: Option<Vec<usize>>,
    /// Largest number of rectangle columns in exhaustive enumerations.
    pub l_max: i64,
    /// Number of random samples per randomized check (at least 1).
    pub trials: usize,
    /// Seed for all random substreams.
    pub seed: u64,
    /// Which suites to run.
    pub suites: Vec<Suite>,
    /// Record real wall-clock times per check. Off by default so that two
    /// runs with the same configuration and seed produce byte-identical
    /// reports; when off, every record carries `elapsed_ms: 0`.
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_range: (2..=5).collect(),
            k_list: None,
            l_max: 3,
            trials: 50,
            seed: 0,
            suites: Suite::ALL.to_vec(),
            timings: false,
        }
    }
}

impl VerifyConfig {
    /// Check the configuration invariants, returning a usage-style message
    /// on violation.
    pub fn validate(&self) -> Result<(), String> {
        if self.n_range.is_empty() {
            return Err("empty rank range: pass at least one n".into());
        }
        for &n in &self.n_range {
            if !(2..=6).contains(&n) {
                return Err(format!("rank n={n} out of range (allowed: 2..=6)"));
            }
        }
        if let Some(ks) = &self.k_list {
            if ks.is_empty() {
                return Err("empty k list: pass at least one k or `all`".into());
            }
            if ks.iter().any(|&k| k == 0) {
                return Err("k must be at least 1".into());
            }
        }
        if self.l_max < 0 {
            return Err("L-max must be nonnegative".into());
        }
        if self.trials == 0 {
            return Err("trials must be at least 1".into());
        }
        if self.suites.is_empty() {
            return Err("no suites selected".into());
        }
        Ok(())
    }

    /// The `(n, k)` cases a suite should run: configured ranks clipped to
    /// the suite's cap, each with its configured charts, sorted and
    /// deduplicated.
    pub(crate) fn cases(&self, suite: Suite) -> Vec<(usize, usize)> {
        let mut ns: Vec<usize> =
            self.n_range.iter().copied().filter(|&n| n <= suite.n_cap()).collect();
        ns.sort_unstable();
        ns.dedup();
        let mut out = Vec::new();
        for n in ns {
            match &self.k_list {
                None => out.extend((1..n).map(|k| (n, k))),
                Some(ks) => {
                    let mut ks: Vec<usize> =
                        ks.iter().copied().filter(|&k| k < n).collect();
                    ks.sort_unstable();
                    ks.dedup();
                    out.extend(ks.into_iter().map(|k| (n, k)));
                }
            }
        }
        out
    }

    /// The suites to run, in canonical order without duplicates.
    pub(crate) fn selected_suites(&self) -> Vec<Suite> {
        Suite::ALL.iter().copied().filter(|s| self.suites.contains(s)).collect()
    }
}

/// Parse a rank specification: a single value (`"4"`), a comma list
/// (`"2,3,5"`), or an inclusive range (`"2-5"`).
pub fn parse_n_spec(spec: &str) -> Result<Vec<usize>, String> {
    let spec = spec.trim();
    if let Some((lo, hi)) = spec.split_once('-') {
        let lo: usize = lo.trim().parse().map_err(|_| format!("bad rank `{lo}`"))?;
        let hi: usize = hi.trim().parse().map_err(|_| format!("bad rank `{hi}`"))?;
        if lo > hi {
            return Err(format!("empty rank range `{spec}`"));
        }
        return Ok((lo..=hi).collect());
    }
    spec.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>().map_err(|_| format!("bad rank `{tok}`"))
        })
        .collect()
}

/// Parse a chart specification: `"all"` or a comma list of `k` values.
pub fn parse_k_spec(spec: &str) -> Result<Option<Vec<usize>>, String> {
    let spec = spec.trim();
    if spec == "all" {
        return Ok(None);
    }
    spec.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>().map_err(|_| format!("bad k `{tok}`"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

/// Parse a suite specification: `"all"` or a comma list of suite names.
pub fn parse_suites_spec(spec: &str) -> Result<Vec<Suite>, String> {
    let spec = spec.trim();
    if spec == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    spec.split(',').map(|tok| Suite::parse(tok.trim())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_specs_cover_the_three_forms() {
        assert_eq!(parse_n_spec("4").unwrap(), vec![4]);
        assert_eq!(parse_n_spec("2,5,3").unwrap(), vec![2, 5, 3]);
        assert_eq!(parse_n_spec("2-5").unwrap(), vec![2, 3, 4, 5]);
        assert!(parse_n_spec("5-2").is_err());
        assert!(parse_n_spec("x").is_err());
    }

    #[test]
    fn suite_specs_parse_and_reject() {
        assert_eq!(parse_suites_spec("all").unwrap(), Suite::ALL.to_vec());
        assert_eq!(
            parse_suites_spec("tropical,combinatorial").unwrap(),
            vec![Suite::Tropical, Suite::Combinatorial]
        );
        assert!(parse_suites_spec("tropcial").is_err());
    }

    #[test]
    fn validation_enforces_the_documented_bounds() {
        let mut cfg = VerifyConfig::default();
        assert!(cfg.validate().is_ok());
        cfg.n_range = vec![7];
        assert!(cfg.validate().is_err());
        cfg.n_range = vec![3];
        cfg.trials = 0;
        assert!(cfg.validate().is_err());
        cfg.trials = 1;
        cfg.suites.clear();
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn cases_respect_caps_k_filters_and_order() {
        let mut cfg = VerifyConfig::default();
        cfg.n_range = vec![6, 3, 3];
        assert_eq!(
            cfg.cases(Suite::Parametrization),
            vec![(3, 1), (3, 2), (6, 1), (6, 2), (6, 3), (6, 4), (6, 5)]
        );
        // Rank 6 is clipped for the sampled suites.
        assert_eq!(cfg.cases(Suite::Symmetry), vec![(3, 1), (3, 2)]);
        cfg.k_list = Some(vec![2, 9]);
        assert_eq!(cfg.cases(Suite::Parametrization), vec![(3, 2), (6, 2)]);
    }
}
