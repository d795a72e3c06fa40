import json, os, sys, time
sys.path.insert(0, "/root/pkg/src")
from graphxc import train

ART = "/root/pkg/artifacts"
os.makedirs(ART, exist_ok=True)

for variant in ["exphormer-full", "nn-lda", "gcn"]:
    t0 = time.time()
    cfg = train.TrainConfig(variant=variant, seed=0)
    def log(msg, v=variant):
        print(f"[{v}] {msg}", flush=True)
    rec = train.train(cfg, checkpoint_path=f"{ART}/{variant}.npz", log=log)
    with open(f"{ART}/{variant}.json", "w") as f:
        f.write(train.run_record_to_json(rec))
    print(f"[{variant}] DONE in {time.time()-t0:.0f}s: "
          f"final_train_mae={rec.final_train_mae:.3f} "
          f"final_val_mae={rec.final_val_mae:.3f} "
          f"epochs={len(rec.train_mae)} stop={rec.stop_reason}", flush=True)
