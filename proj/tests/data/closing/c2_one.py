x = 3
y = eval(input())
s = x + y + 1
t = [s, x, y]
u = t[0] + t[1] + t[2]
print(u + s)
print(t[1])
