"""Detect and undo a PGD attack with the Python API, end to end, in a few minutes.

Trains a small victim on a slice of CIFAR-10, attacks it, fits a perturbation
extractor and a binary discriminator, then reports detection accuracy and
victim accuracy before and after recovery.  The slice is tiny so the numbers
are rough; configs/desk.toml is the full-size version.

    python3 gallery/walkthrough_api.py [--data data/cifar10]
"""

import argparse

import torch

from advforensics.attacks import AttackSpec, build_ae_dataset
from advforensics.data import load_dataset
from advforensics.discriminator import train_discriminator
from advforensics.evaluation import DetectionPipeline, detection_set, evaluate_detector
from advforensics.extractor import ExtractorTrainConfig, extract, train_extractor
from advforensics.forensics import recover
from advforensics.victims import TrainConfig, predict, train_victim


def accuracy(victim, images, labels):
    return (predict(victim, images)[1] == labels).double().mean().item()


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--data", default="data/cifar10")
    args = parser.parse_args()
    torch.set_num_threads(1)

    manifest, records = load_dataset("cifar10", args.data)
    train = records.split("train").subset_per_class(300)
    test = records.split("test").subset_per_class(30)

    # victim: a few epochs is enough to have something worth attacking
    victim, _ = train_victim(manifest, train, "small-vgg", TrainConfig(learning_rate=1e-3, epochs=5))
    print(f"victim test accuracy {accuracy(victim, *test.tensors()):.3f}")

    pgd = AttackSpec("PGD", epsilon=0.1, seed=1)
    fit = build_ae_dataset(victim, train.subset_per_class(60), pgd)
    held_out = build_ae_dataset(victim, test, pgd, keep_policy="all")
    print(f"PGD success on held-out images {held_out.success_rate:.3f}")

    extractor, _ = train_extractor(victim, [fit], ExtractorTrainConfig(learning_rate=1e-3, epochs=5),
                                   depth=4, base_channels=16)
    ne = extract(extractor, held_out.normal).abs().mean().item()
    ae = extract(extractor, held_out.adversarial).abs().mean().item()
    print(f"mean |G| on normals {ne:.4f}, on adversarials {ae:.4f}")

    discriminator, _ = train_discriminator(extractor, fit, cfg=TrainConfig(learning_rate=1e-3, epochs=10))
    detector = DetectionPipeline(extractor, discriminator, victim.victim_id, "pgd")
    metrics, _, _ = evaluate_detector(detector, *detection_set(held_out.successful()))
    print(f"detection accuracy {metrics['accuracy']:.3f}, f1 {metrics['f1']:.3f}")

    recovered = recover(extractor, held_out.adversarial).images
    print("victim accuracy: original {:.3f}, adversarial {:.3f}, recovered {:.3f}".format(
        accuracy(victim, held_out.normal, held_out.labels),
        accuracy(victim, held_out.adversarial, held_out.labels),
        accuracy(victim, recovered, held_out.labels)))


if __name__ == "__main__":
    main()
