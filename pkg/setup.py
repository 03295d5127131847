#!/usr/bin/env python3
"""
Setup script for the topological index toolkit
Creates virtual environment and installs dependencies
"""

import os
import subprocess
import sys


def run_command(command, description):
    """Run a command and handle errors"""
    print(f"Running: {description}")
    try:
        result = subprocess.run(command, shell=True, check=True, capture_output=True, text=True)
        print(f"✓ {description} completed successfully")
        return result
    except subprocess.CalledProcessError as e:
        print(f"✗ {description} failed:")
        print(f"Error: {e.stderr}")
        return None


def main():
    """Main setup function"""
    dev = "--dev" in sys.argv[1:]
    print("Setting up topological index toolkit environment...")

    if not os.path.exists("venv"):
        if run_command(f"{sys.executable} -m venv venv", "Creating virtual environment") is None:
            return 1
    else:
        print("✓ Virtual environment already exists")

    if os.name == 'nt':  # Windows
        activate_cmd = "venv\\Scripts\\activate"
        python_cmd = "venv\\Scripts\\python"
    else:
        activate_cmd = "source venv/bin/activate"
        python_cmd = "venv/bin/python"

    requirements = "requirements-dev.txt" if dev else "requirements.txt"
    run_command(f"{python_cmd} -m pip install --upgrade pip", "Upgrading pip")
    if run_command(f"{python_cmd} -m pip install -r {requirements}", f"Installing {requirements}") is None:
        return 1

    print("\n✓ Setup completed successfully!")
    print(f"To activate the environment, run: {activate_cmd}")
    print("Then try: python scripts/harness_cli.py index --graph cycle:5")
    return 0


if __name__ == "__main__":
    if any(arg != "--dev" for arg in sys.argv[1:]):
        # Invoked by a build backend (pip install): metadata lives in pyproject.toml.
        from setuptools import setup
        setup()
    else:
        sys.exit(main())
