use clap::Parser;
use qmax::cli::{exit_code, render_text, run, Cli, Outcome};
use std::io::Write;
use std::process::exit;
use std::sync::mpsc;
use std::time::{Duration, Instant};

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    let (tx, rx) = mpsc::channel();
    let worker = cli.clone();
    std::thread::spawn(move || {
        let _ = tx.send(run(&worker));
    });
    let got = match cli.global.timeout_ms {
        Some(ms) => match rx.recv_timeout(Duration::from_millis(ms)) {
            Ok(r) => r,
            Err(_) => {
                eprintln!("error: timed out after {ms} ms");
                exit(3);
            }
        },
        None => rx.recv().expect("worker sends a result"),
    };
    let (mut rep, code) = match got {
        Ok(Outcome::Done(r)) => (r, 0),
        Ok(Outcome::Failed(r)) => (r, 1),
        Err(e) => {
            eprintln!("error: {e}");
            exit(exit_code(&e));
        }
    };
    if cli.global.timing {
        rep.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    let text = if cli.global.json {
        serde_json::to_string_pretty(&rep).expect("report serializes") + "\n"
    } else {
        render_text(&cli, &rep)
    };
    // A closed pipe (e.g. `| head`) is not an error.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    exit(code);
}
