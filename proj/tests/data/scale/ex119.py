k = 0
y = eval(input())
k = k + y
y = eval(input())
k = k + y
y = eval(input())
k = k + y
print(k)
