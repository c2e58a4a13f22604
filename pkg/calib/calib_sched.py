import time, sys
import torch
torch.set_num_threads(1)
from videosteg.samples import sample_corpus
from videosteg.media import make_pairs
from videosteg.training import TrainConfig, train_hr, write_train_log

clips = sample_corpus(num_clips=8)
pairs = make_pairs(clips, seed=0)

for name, cfg in [
    ("B_lr0.1_decay250", TrainConfig(learning_rate=0.1, batch_size=4, max_steps=500, seed=0, decay_interval=250)),
    ("A_lr0.2_default",  TrainConfig(learning_rate=0.2, batch_size=4, max_steps=500, seed=0)),
]:
    t0 = time.time()
    bundle, report = train_hr(pairs, cfg)
    dt = time.time() - t0
    write_train_log(report, f"calib/{name}.csv")
    print(f"[{name}] {dt/60:.1f} min")
    print(f"  h: {report.initial_h_loss:.4f} -> {report.final_h_loss:.4f} (bound {0.5*report.initial_h_loss:.4f})")
    print(f"  r: {report.initial_r_loss:.4f} -> {report.final_r_loss:.4f} (bound {0.5*report.initial_r_loss:.4f})")
    print(f"  container apd: {report.initial_container_apd:.2f} -> {report.final_container_apd:.2f}")
    print(f"  secret apd:    {report.initial_secret_apd:.2f} -> {report.final_secret_apd:.2f}")
    sys.stdout.flush()
    import videosteg.nets as nets
    nets.save_checkpoint(bundle, f"calib/{name}.pt")
