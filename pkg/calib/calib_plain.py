import time, csv
import torch
torch.set_num_threads(1)
from videosteg.samples import sample_corpus
from videosteg.media import make_pairs
from videosteg.training import TrainConfig, train_hr, write_train_log

clips = sample_corpus(num_clips=8)
pairs = make_pairs(clips, seed=0)
cfg = TrainConfig(learning_rate=0.1, batch_size=4, max_steps=500, seed=0, val_every=100)
t0 = time.time()
bundle, report = train_hr(pairs, cfg)
dt = time.time() - t0
write_train_log(report, "calib/plain_lr0.1.csv")
print(f"500 steps in {dt/60:.1f} min")
print("h:", report.initial_h_loss, "->", report.final_h_loss)
print("r:", report.initial_r_loss, "->", report.final_r_loss)
print("container apd:", report.initial_container_apd, "->", report.final_container_apd)
print("secret apd:", report.initial_secret_apd, "->", report.final_secret_apd)
import videosteg.nets as nets
nets.save_checkpoint(bundle, "calib/plain_lr0.1.pt")
