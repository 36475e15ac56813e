from spike_planner.cli.main import run

if __name__ == "__main__":
    run()
