use std::io::{self, Write};

use log::LevelFilter;

fn main() {
    let level = match std::env::var("HYP_LOG").as_deref() {
        Ok("debug") => LevelFilter::Debug,
        Ok("info") => LevelFilter::Info,
        _ => LevelFilter::Off,
    };
    env_logger::Builder::new().filter_level(level).init();

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = hypdom::cli::run(std::env::args_os(), &mut out, &mut io::stderr());
    let _ = out.flush();
    std::process::exit(code);
}
