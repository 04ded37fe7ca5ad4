use clap::Args;
use covdta::gen::{covered_family, letters, random_word};
use covdta::minimize::{solve_scc, MinimizeOptions, SccOptions};
use covdta::text::intern_words;
use covdta::{recognize, CoverMode, Dta, Engine};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;
use crate::report::{join, Report};
use crate::Mode;

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=26))]
    alphabet_size: u8,
    /// Words per generated family.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=10_000))]
    words: u32,
    /// Maximum word length.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=4_096))]
    length: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..=100_000))]
    instances: u32,
    #[arg(long, value_enum, default_value_t = Mode::Edge)]
    mode: Mode,
}

const COLUMNS: [&str; 13] = [
    "instance",
    "cover",
    "cover_states",
    "target_states",
    "depth",
    "covered",
    "serial_steps",
    "parallel_steps",
    "parallel_rounds",
    "messages",
    "critical_path",
    "steps_ratio",
    "engines_agree",
];

/// Random covered instances through both engines, then the shortest common
/// cover search on the same families. Output depends only on the flags.
pub fn run(args: &BenchArgs) -> Result<String, CliError> {
    let mode = CoverMode::from(args.mode);
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let abc = letters(args.alphabet_size as usize);
    let length = args.length as usize;

    let mut report = Report::new("bench");
    report
        .put("alphabet_size", args.alphabet_size)
        .put("words", args.words)
        .put("length", args.length)
        .put("seed", args.seed)
        .put("instances", args.instances)
        .put("mode", mode.name())
        .put("columns", join(COLUMNS, " "));

    let mut max_ratio: f64 = 0.0;
    let mut max_rounds_per_level: f64 = 0.0;
    let mut rounds_within_bound = true;
    let mut all_agree = true;
    let mut families = Vec::with_capacity(args.instances as usize);

    for i in 0..args.instances {
        let slen = rng.gen_range(1..=length.min(3));
        let s = random_word(&mut rng, &abc, slen);
        let family = covered_family(&mut rng, &s, args.words as usize, length);
        let (alphabet, words) = intern_words(&family);
        let target = Dta::trie(&words, &alphabet).map_err(|e| CliError::Usage(e.to_string()))?;
        let cover =
            Dta::path(&alphabet.word(&s).expect("family contains s's letters"), &alphabet).expect("same alphabet");

        let serial = recognize(&cover, &target, mode, Engine::Serial).expect("same alphabet");
        let parallel = recognize(&cover, &target, mode, Engine::Parallel).expect("same alphabet");
        let agree = serial.availability == parallel.availability
            && serial.pruned == parallel.pruned
            && serial.outcome.verdict == parallel.outcome.verdict;
        all_agree &= agree;

        let area = (cover.num_states() * target.num_states()) as f64;
        let (ss, ps) = (serial.outcome.stats, parallel.outcome.stats);
        let ratio = ss.basic_steps.max(ps.basic_steps) as f64 / area;
        max_ratio = max_ratio.max(ratio);
        let depth = target.depth();
        rounds_within_bound &= ps.parallel_rounds <= 2 * depth as u64 + 2;
        max_rounds_per_level = max_rounds_per_level.max(ps.parallel_rounds as f64 / (depth + 1) as f64);

        report.put(
            "row",
            join(
                [
                    i.to_string(),
                    s.clone(),
                    cover.num_states().to_string(),
                    target.num_states().to_string(),
                    depth.to_string(),
                    serial.outcome.covered().to_string(),
                    ss.basic_steps.to_string(),
                    ps.basic_steps.to_string(),
                    ps.parallel_rounds.to_string(),
                    ps.messages.to_string(),
                    ps.critical_path.to_string(),
                    format!("{ratio:.3}"),
                    agree.to_string(),
                ],
                " ",
            ),
        );
        families.push(family);
    }

    report
        .put("max_steps_ratio", format!("{max_ratio:.3}"))
        .put("max_rounds_per_level", format!("{max_rounds_per_level:.3}"))
        .put("rounds_within_2d_plus_2", rounds_within_bound)
        .put("engines_agree", all_agree);

    // shortest common cover over every prefix of the shortest word
    let options = SccOptions {
        mode,
        border_filter: false,
        minimize: MinimizeOptions { engine: Engine::Parallel, concurrent: true, ..MinimizeOptions::default() },
    };
    let (mut candidates, mut checked, mut steps, mut found) = (0usize, 0usize, 0u64, 0usize);
    let mut max_span_ratio: f64 = 0.0;
    for family in &families {
        let (alphabet, words) = intern_words(family);
        let min_len = words.iter().map(|w| w.len()).min().unwrap_or(0);
        let r = solve_scc(&words, &alphabet, &options)?;
        candidates += r.candidates;
        checked += r.cost.checked;
        steps += r.cost.basic_steps;
        found += usize::from(r.cover.is_some());
        max_span_ratio = max_span_ratio.max(r.cost.max_critical_path as f64 / (min_len * min_len).max(1) as f64);
    }
    report
        .put("scc_found", found)
        .put("scc_candidates", candidates)
        .put("scc_checked", checked)
        .put("scc_basic_steps", steps)
        .put("scc_max_span_over_min_len_sq", format!("{max_span_ratio:.3}"))
        .put(
            "note",
            "candidates are all prefixes of the shortest word (min|w| per family); limiting them to prefixes \
             ending on a final trie state would miss covers, e.g. aba for {ababa, abaaba}, so the \
             |L|*min|w|*|A_L| cost estimate built on that limited set is not what is measured here",
        );
    Ok(report.render())
}
