//! Ordered parallel map: items are processed by a small worker pool and
//! delivered to the sink in input order. With one worker everything runs
//! inline on the calling thread.

use std::collections::BTreeMap;
use std::io;
use std::sync::mpsc;

pub fn ordered_map<T, R, F>(
    items: impl Iterator<Item = T> + Send,
    workers: usize,
    map: F,
    mut sink: impl FnMut(R) -> io::Result<()>,
) -> io::Result<()>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
{
    if workers <= 1 {
        for item in items {
            sink(map(item))?;
        }
        return Ok(());
    }
    let map = &map;
    let (work_tx, work_rx) = mpsc::sync_channel::<(u64, T)>(workers * 2);
    let work_rx = std::sync::Mutex::new(work_rx);
    let (done_tx, done_rx) = mpsc::sync_channel::<(u64, R)>(workers * 2);
    let work_rx = &work_rx;
    std::thread::scope(|scope| {
        for _ in 0..workers {
            let done_tx = done_tx.clone();
            scope.spawn(move || loop {
                let received = work_rx.lock().expect("worker queue poisoned").recv();
                match received {
                    Ok((seq, item)) => {
                        if done_tx.send((seq, map(item))).is_err() {
                            return;
                        }
                    }
                    Err(_) => return,
                }
            });
        }
        drop(done_tx);
        scope.spawn(move || {
            for (seq, item) in (0u64..).zip(items) {
                if work_tx.send((seq, item)).is_err() {
                    return;
                }
            }
        });
        let mut pending: BTreeMap<u64, R> = BTreeMap::new();
        let mut next = 0u64;
        for (seq, result) in done_rx {
            pending.insert(seq, result);
            while let Some(result) = pending.remove(&next) {
                sink(result)?;
                next += 1;
            }
        }
        while let Some(result) = pending.remove(&next) {
            sink(result)?;
            next += 1;
        }
        Ok(())
    })
}
