from tricomi.cli import main

raise SystemExit(main())
