import sys
import os

from dotenv import load_dotenv

# Packages live directly under src/
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

load_dotenv()
