//! Row-parallel search. Rows are cut into fixed chunks independent of the
//! worker count and concatenated in order, so output does not depend on `jobs`.

use pellrec_core::search::{assemble, prepare_terms, search_rows, SearchConfig, SearchResult};
use rayon::prelude::*;

use crate::CliError;

const CHUNK: usize = 16;

pub const JOBS_ENV: &str = "PELLREC_JOBS";

/// Worker count: explicit flag, then `PELLREC_JOBS`, then the number of CPUs.
pub fn resolve_jobs(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(j) = flag {
        return if j == 0 { Err(CliError::Usage("--jobs must be at least 1".into())) } else { Ok(j) };
    }
    match std::env::var(JOBS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&j| j > 0)
            .ok_or_else(|| CliError::Usage(format!("{JOBS_ENV}={v:?} is not a positive integer"))),
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, usize::from)),
    }
}

pub fn search(config: &SearchConfig, jobs: usize) -> Result<SearchResult, CliError> {
    let terms = prepare_terms(config)?;
    let rows = config.bound + 1;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    let chunks: Vec<_> = pool.install(|| {
        (0..rows.div_ceil(CHUNK))
            .into_par_iter()
            .map(|c| search_rows(config, &terms, c * CHUNK..((c + 1) * CHUNK).min(rows)))
            .collect()
    });
    Ok(assemble(config.clone(), chunks.into_iter().flatten().collect()))
}
