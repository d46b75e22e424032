package cadence

func (x *handler) run() {
	if x.ready {
		if s.config.EnableClientVersionCheck {
			x.apply()
		}
	}
}
